#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "gwcx/measures.hpp"
#include "gwcx/sampling.hpp"

namespace gwcx {

enum class EstimatorStyle { step, kernel };
enum class Kernel { gaussian, epanechnikov };

// Where the smoothed cdf is read on each segment [x_(i), x_(i+1)].
// order_statistic reads F_h(x_(i)) literally; there the datum itself only
// contributes L(0) = 1/2, so the estimate does not tend to the step
// estimate as h -> 0. midpoint reads F_h((x_(i) + x_(i+1)) / 2), which does.
enum class KernelAnchor { midpoint, order_statistic };

const char* style_name(EstimatorStyle s) noexcept;
const char* kernel_name(Kernel k) noexcept;
const char* anchor_name(KernelAnchor a) noexcept;

struct EstimatorConfig {
  Variant variant = Variant::past;  // past or residual
  double m = 1.0;                   // weight w(x) = x^m
  EstimatorStyle style = EstimatorStyle::step;
  Kernel kernel = Kernel::gaussian;
  std::optional<double> bandwidth;  // empty: Silverman's rule
  KernelAnchor anchor = KernelAnchor::midpoint;
  /// Residual only: add the [0, x_(1)) segment where the empirical survival
  /// function is 1, i.e. -x_(1)^{m+1} / (2(m+1)).
  bool include_head = false;

  void validate() const;
};

/// -1/(2(m+1)) sum_{i=1}^{n-1} (x_(i+1)^{m+1} - x_(i)^{m+1}) c_i with
/// c_i = (i/n)^2 (past) or (1 - i/n)^2 (residual).
double step_estimate(std::span<const double> observations, const EstimatorConfig& cfg);

/// Integrated kernel L(t) = int_{-inf}^t K.
double integrated_kernel(Kernel kernel, double t);

/// F_h(x) = (1/n) sum_j L((x - X_j) / h).
double smoothed_cdf(std::span<const double> observations, Kernel kernel, double h, double x);

/// Same sum as step_estimate with c_i built from F_h at the configured anchor.
double kernel_estimate(std::span<const double> observations, const EstimatorConfig& cfg);

/// Dispatches on cfg.style.
double estimate(std::span<const double> observations, const EstimatorConfig& cfg);

/// 1.06 * s * n^{-1/5}, s the sample standard deviation (n - 1 divisor).
double bandwidth_silverman(std::span<const double> observations);
double silverman_rule(double sd, std::size_t n);

/// Numeric bandwidth from the config, or Silverman's rule when unset.
double resolve_bandwidth(std::span<const double> observations, const EstimatorConfig& cfg);

inline double step_estimate(const Sample& s, const EstimatorConfig& cfg) {
  return step_estimate(s.values, cfg);
}
inline double kernel_estimate(const Sample& s, const EstimatorConfig& cfg) {
  return kernel_estimate(s.values, cfg);
}
inline double smoothed_cdf(const Sample& s, Kernel kernel, double h, double x) {
  return smoothed_cdf(s.values, kernel, h, x);
}
inline double bandwidth_silverman(const Sample& s) { return bandwidth_silverman(s.values); }

}  // namespace gwcx
