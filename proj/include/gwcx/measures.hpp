#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwcx/distributions.hpp"
#include "gwcx/quadrature.hpp"
#include "gwcx/weights.hpp"

namespace gwcx {

// past: GWCPJ (weighted -1/2 int w F^2); residual: GWCRJ (weighted
// -1/2 int w (1-F)^2); extropy: weighted extropy -1/2 int w f^2.
enum class Variant { past, residual, extropy };

enum class Design { single, srs, min_rssu, max_rssu };

const char* variant_name(Variant v) noexcept;
const char* design_name(Design d) noexcept;

struct MeasureSpec {
  Variant variant = Variant::past;
  Design design = Design::single;
  unsigned n = 1;

  /// Throws InvalidArgumentError for combinations with no defined measure:
  /// single with n != 1, past with minRSSU, residual with maxRSSU, extropy
  /// with any design but single.
  void validate() const;
};

enum class IntegrandTag { lambda, delta, psi, phi, extropy_density };

/// Which u-space integrand to use. `order` is the product index i of the
/// psi/phi kinds and is ignored otherwise.
struct IntegrandKind {
  IntegrandTag tag = IntegrandTag::lambda;
  unsigned order = 0;
};

/// u^{2i} w(Q(u)) / f(Q(u)) and friends, evaluated at a single u in (0, 1).
double integrand_value(const Distribution& d, const WeightFunction& w, IntegrandKind kind,
                       double u);

/// Integral over (0,1) of the selected integrand. Throws DivergenceError
/// when the quadrature does not converge or the integrand is singular.
IntegrationResult integrate_kind(const Distribution& d, const WeightFunction& w,
                                 IntegrandKind kind, const QuadratureOptions& opts = {});

struct MeasureOptions {
  QuadratureOptions quadrature{};
  /// Evaluate product factors concurrently. The merge multiplies in index
  /// order, so the value is bit-identical to the sequential path.
  bool parallel = false;
};

struct MeasureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  /// Per-factor integrals in index order (i = 1..n); a single entry for
  /// single-variable and SRS evaluations.
  std::vector<IntegrationResult> factors;
};

MeasureResult gwj(const Distribution& d, const WeightFunction& w, const MeasureOptions& opts = {});

/// GWCPJ (past) or GWCRJ (residual) of a single variable.
MeasureResult gw_cumulative(const Distribution& d, const WeightFunction& w, Variant variant,
                            const MeasureOptions& opts = {});

MeasureResult gw_design_measure(const Distribution& d, const WeightFunction& w,
                                const MeasureSpec& spec, const MeasureOptions& opts = {});

/// Known closed forms for power weights on the uniform, exponential and
/// power-survival families. Used as an oracle; never a fast path.
std::optional<double> closed_form(const Distribution& d, const WeightFunction& w,
                                  const MeasureSpec& spec);

/// True when the measure is known to diverge without integrating: a past
/// variant on an unbounded support with a weight that does not decay.
bool diverges_a_priori(const Distribution& d, const WeightFunction& w, Variant variant);

}  // namespace gwcx
