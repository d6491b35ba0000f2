#include "gwcx/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "gwcx/error.hpp"

namespace gwcx {

const char* style_name(EstimatorStyle s) noexcept {
  return s == EstimatorStyle::step ? "step" : "kernel";
}
const char* kernel_name(Kernel k) noexcept {
  return k == Kernel::gaussian ? "gaussian" : "epanechnikov";
}
const char* anchor_name(KernelAnchor a) noexcept {
  return a == KernelAnchor::midpoint ? "midpoint" : "order-statistic";
}

void EstimatorConfig::validate() const {
  if (variant == Variant::extropy) {
    throw InvalidArgumentError("estimators cover the past and residual variants only");
  }
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgumentError("weight exponent m must be > 0");
  if (bandwidth && !(*bandwidth > 0.0)) throw BandwidthError("bandwidth must be positive");
}

namespace {

std::vector<double> checked_sorted(std::span<const double> obs) {
  if (obs.size() < 2) {
    throw InsufficientDataError("estimators need at least 2 observations");
  }
  std::vector<double> x(obs.begin(), obs.end());
  for (double v : x) {
    if (!std::isfinite(v)) throw DomainError("observation is not finite");
    if (v < 0.0) {
      std::ostringstream os;
      os << "power-weight estimators need nonnegative data, got " << v;
      throw DomainError(os.str());
    }
  }
  std::sort(x.begin(), x.end());
  return x;
}

// Shared by both estimators: coef(i) is the plug-in F or (1 - F) value on
// segment i (1-based), squared by the caller's convention below.
template <class Coef>
double segment_sum(const std::vector<double>& x, const EstimatorConfig& cfg, Coef coef) {
  const double p = cfg.m + 1.0;
  const std::size_t n = x.size();
  double sum = 0.0;
  double lower = std::pow(x[0], p);
  for (std::size_t i = 1; i < n; ++i) {
    const double upper = std::pow(x[i], p);
    const double c = coef(i);
    sum += (upper - lower) * c * c;
    lower = upper;
  }
  double value = -sum / (2.0 * p);
  if (cfg.include_head && cfg.variant == Variant::residual) {
    value -= std::pow(x[0], p) / (2.0 * p);
  }
  return value;
}

// Kernel tails beyond these arguments are exactly 0 or 1 in double.
double kernel_reach(Kernel k) { return k == Kernel::gaussian ? 40.0 : 1.0; }

// F_h at x over ascending data, skipping terms that are exactly 0 or 1.
double smoothed_cdf_sorted(const std::vector<double>& xs, Kernel kernel, double h, double x) {
  const double reach = kernel_reach(kernel) * h;
  const auto first = std::lower_bound(xs.begin(), xs.end(), x - reach);
  const auto last = std::upper_bound(xs.begin(), xs.end(), x + reach);
  double acc = 0.0;
  for (auto it = first; it != last; ++it) acc += integrated_kernel(kernel, (x - *it) / h);
  // Everything below the window has L = 1.
  acc += static_cast<double>(first - xs.begin());
  return std::clamp(acc / static_cast<double>(xs.size()), 0.0, 1.0);
}

}  // namespace

double step_estimate(std::span<const double> observations, const EstimatorConfig& cfg) {
  cfg.validate();
  const auto x = checked_sorted(observations);
  const double n = static_cast<double>(x.size());
  const bool past = cfg.variant == Variant::past;
  return segment_sum(x, cfg, [&](std::size_t i) {
    const double f = static_cast<double>(i) / n;
    return past ? f : 1.0 - f;
  });
}

double integrated_kernel(Kernel kernel, double t) {
  if (kernel == Kernel::gaussian) return 0.5 * std::erfc(-t / std::sqrt(2.0));
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return 0.5 + 0.75 * (t - t * t * t / 3.0);
}

double smoothed_cdf(std::span<const double> observations, Kernel kernel, double h, double x) {
  if (!(h > 0.0)) throw BandwidthError("bandwidth must be positive");
  if (observations.empty()) throw InsufficientDataError("smoothed_cdf needs data");
  double acc = 0.0;
  for (double xi : observations) acc += integrated_kernel(kernel, (x - xi) / h);
  return std::clamp(acc / static_cast<double>(observations.size()), 0.0, 1.0);
}

double kernel_estimate(std::span<const double> observations, const EstimatorConfig& cfg) {
  cfg.validate();
  const auto x = checked_sorted(observations);
  const double h = resolve_bandwidth(x, cfg);
  const bool past = cfg.variant == Variant::past;
  return segment_sum(x, cfg, [&](std::size_t i) {
    const double at = cfg.anchor == KernelAnchor::midpoint ? 0.5 * (x[i - 1] + x[i]) : x[i - 1];
    const double f = smoothed_cdf_sorted(x, cfg.kernel, h, at);
    return past ? f : 1.0 - f;
  });
}

double estimate(std::span<const double> observations, const EstimatorConfig& cfg) {
  return cfg.style == EstimatorStyle::step ? step_estimate(observations, cfg)
                                           : kernel_estimate(observations, cfg);
}

double silverman_rule(double sd, std::size_t n) {
  if (n < 2) throw InsufficientDataError("Silverman's rule needs at least 2 observations");
  if (!(sd > 0.0)) throw BandwidthError("Silverman's rule needs a nonzero standard deviation");
  return 1.06 * sd * std::pow(static_cast<double>(n), -0.2);
}

double bandwidth_silverman(std::span<const double> observations) {
  const std::size_t n = observations.size();
  if (n < 2) throw InsufficientDataError("Silverman's rule needs at least 2 observations");
  const double mean =
      std::accumulate(observations.begin(), observations.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : observations) ss += (v - mean) * (v - mean);
  return silverman_rule(std::sqrt(ss / static_cast<double>(n - 1)), n);
}

double resolve_bandwidth(std::span<const double> observations, const EstimatorConfig& cfg) {
  if (cfg.bandwidth) {
    if (!(*cfg.bandwidth > 0.0)) throw BandwidthError("bandwidth must be positive");
    return *cfg.bandwidth;
  }
  return bandwidth_silverman(observations);
}

}  // namespace gwcx
