#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gwcx/distributions.hpp"
#include "gwcx/measures.hpp"
#include "gwcx/weights.hpp"

namespace gwcx {

/// Floating-point slack: violations smaller than this count as equality.
inline constexpr double kOrderSlack = 1e-9;
/// Hypothesis violations in [-kInconclusiveBand, -kOrderSlack) are reported
/// as inconclusive rather than failed.
inline constexpr double kInconclusiveBand = 1e-6;
/// Cap on each axis of the superadditivity pair grid.
inline constexpr std::size_t kSuperadditiveAxisCap = 64;

enum class OrderKind { disp, convex_transform, star, superadditive, st };

const char* order_name(OrderKind k) noexcept;

struct OrderVerdict {
  OrderKind kind = OrderKind::disp;
  bool holds_x_le_y = false;
  std::size_t grid = 0;         // number of tested points (or pairs)
  double worst_violation = 0.0; // smallest signed margin; >= 0 means no violation
};

/// Numerical check of X <=_kind Y on an interior grid u_k = k / (N + 1).
///   disp:             f(F^-1(u)) - g(G^-1(u)) >= 0
///   st:               G^-1(u) - F^-1(u) >= 0
///   convex_transform: slopes of phi = G^-1 o F nondecreasing
///   star:             phi(x) / x nondecreasing
///   superadditive:    phi(x + y) - (phi(x) + phi(y)) >= 0 on pairs inside
///                     the support of X
/// The shape orders require both supports to start at 0 (DomainError
/// otherwise). Quantile failures surface as EvaluationError.
OrderVerdict check_order(OrderKind kind, const Distribution& x, const Distribution& y,
                         std::size_t grid_points = 99);

// ---------------------------------------------------------------------------
// Theorem harness

enum class CheckStatus { holds, fails, inconclusive };

const char* check_status_name(CheckStatus s) noexcept;

CheckStatus classify_margin(double margin) noexcept;

struct HypothesisCheck {
  std::string name;
  CheckStatus status = CheckStatus::holds;
  double margin = 0.0;
  std::string detail;
  bool passed() const { return status == CheckStatus::holds; }
};

struct ConclusionCheck {
  std::string name;
  double margin = 0.0;           // lhs - rhs of the asserted ">=" (may be +-inf)
  double error_estimate = 0.0;   // combined quadrature error of both sides
  CheckStatus status = CheckStatus::holds;
  std::string detail;
};

/// passed: hypotheses hold, every conclusion holds.
/// failed: hypotheses hold and a conclusion is violated beyond its error.
/// inconclusive: some check sits inside a tolerance band.
/// beyond_hypotheses: a hypothesis fails; conclusions are reported only.
/// error: evaluation raised an exception.
enum class TheoremStatus { passed, failed, inconclusive, beyond_hypotheses, error };

const char* theorem_status_name(TheoremStatus s) noexcept;

struct TheoremReport {
  std::string theorem_id;
  std::string label;
  std::vector<HypothesisCheck> hypotheses_checked;
  std::vector<ConclusionCheck> conclusions;
  double conclusion_margin = 0.0;  // min over conclusions
  bool passed = false;
  TheoremStatus status = TheoremStatus::error;
  std::size_t grid = 0;
  std::string notes;

  /// True when the theorem's hypotheses hold but a conclusion fails.
  bool gated_failure() const { return status == TheoremStatus::failed; }
};

enum class TheoremId {
  t2_1,           // GWCPJ, dispersive order, single variable
  t2_2,           // GWCRJ, dispersive order, single variable
  t3_psi,         // GWCPJ of SRS under Y = psi(X)
  t4_max_psi,     // GWCPJ of maxRSSU under Y = psi(X)
  t4_min_psi,     // GWCRJ of minRSSU under Y = psi(X)
  t4_max_ge_srs,  // maxRSSU >= SRS (past)
  t4_min_ge_srs,  // minRSSU >= SRS (residual)
  t5_1,           // GWCPJ of maxRSSU, dispersive order
  t5_3,           // GWCRJ of minRSSU, dispersive order
  t6_min_mono,    // minRSSU residual increasing in n
  t6_max_mono,    // maxRSSU past increasing in n
};

const char* theorem_name(TheoremId id) noexcept;

struct TheoremCase {
  TheoremId id = TheoremId::t2_1;
  std::string label;
  Distribution x;
  std::optional<Distribution> y;
  std::optional<Transformation> psi;
  WeightFunction w1;
  std::optional<WeightFunction> w2;
  unsigned n_min = 1;
  unsigned n_max = 1;
};

struct SuiteOptions {
  std::size_t grid_points = 512;
  MeasureOptions measure{};
  bool parallel = false;
};

TheoremReport run_theorem(const TheoremCase& c, const SuiteOptions& opts = {});
std::vector<TheoremReport> run_theorem_suite(const std::vector<TheoremCase>& cases,
                                             const SuiteOptions& opts = {});

/// Every pair (X, Y) with f(0) >= g(0) > 0 for which a superadditive, star
/// or convex-transform verdict holds must also pass the dispersive check.
TheoremReport shape_order_consistency(const std::vector<Distribution>& family,
                                 std::size_t grid_points = 99);

/// Distributions used by the default shape-order consistency sweep.
std::vector<Distribution> registered_order_family();

/// Configuration exercised by the `verify` command.
std::vector<TheoremCase> default_theorem_cases();

/// Measure value with divergence mapped to -infinity (all factors are
/// nonnegative, so a divergent factor drives the product to +inf).
struct ExtendedMeasure {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  bool divergent = false;
  std::string diagnostic;
};

ExtendedMeasure extended_measure(const Distribution& d, const WeightFunction& w,
                                 const MeasureSpec& spec, const MeasureOptions& opts = {});

/// lhs - rhs in the extended reals; two divergent sides compare equal.
double extended_margin(const ExtendedMeasure& lhs, const ExtendedMeasure& rhs);

/// JSON array of reports.
std::string reports_to_json(const std::vector<TheoremReport>& reports);

}  // namespace gwcx
