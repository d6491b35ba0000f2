#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace gwcx {

struct IntegrationResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 10000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod integration over (lo, hi).
///
/// Every subinterval is mapped through the endpoint-flattening cubic
/// x = lo + (hi - lo) * t^2 (3 - 2t), so integrable algebraic or
/// logarithmic endpoint singularities become bounded in t. The integrand is
/// never evaluated at lo or hi. A non-finite integrand value raises
/// IntegrandError; an exhausted subdivision budget (or a subinterval that
/// can no longer be bisected in double precision) returns a result with
/// converged == false.
IntegrationResult integrate_interval(const Integrand& f, double lo, double hi,
                                     const QuadratureOptions& opts = {});

IntegrationResult integrate_unit_interval(const Integrand& f,
                                          const QuadratureOptions& opts = {});

enum class SpecialFunction { gamma, beta };

/// Gamma(a) or Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
double gamma_beta(SpecialFunction kind, double a,
                  std::optional<double> b = std::nullopt);

inline double gamma_fn(double a) { return gamma_beta(SpecialFunction::gamma, a); }
inline double beta_fn(double a, double b) {
  return gamma_beta(SpecialFunction::beta, a, b);
}

}  // namespace gwcx
