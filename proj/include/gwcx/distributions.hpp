#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace gwcx {

enum class Family { uniform, exponential, power_survival, transformed, custom };

const char* family_name(Family f) noexcept;

/// Strictly increasing map psi with psi(0) = 0, used to build Y = psi(X).
class Transformation {
 public:
  using Fn = std::function<double(double)>;

  /// `inverse` may be empty, in which case inversion falls back to bisection.
  Transformation(std::string name, Fn psi, Fn psi_prime, Fn inverse = {});

  static Transformation exp_minus_one();
  static Transformation identity();

  double operator()(double x) const { return psi_(x); }
  double derivative(double x) const { return psi_prime_(x); }
  bool has_closed_inverse() const { return static_cast<bool>(inverse_); }

  /// Solves psi(x) = y for x in [lo, hi]; hi may be +inf. Bisection stops
  /// once the bracket is narrower than 1e-12 (relative above 1).
  double inverse(double y, double lo, double hi) const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Fn psi_;
  Fn psi_prime_;
  Fn inverse_;
};

namespace detail {
class DistributionModel;
}

/// Absolutely continuous distribution described by its cdf, pdf and quantile
/// function. Immutable, cheap to copy, safe to share between threads.
class Distribution {
 public:
  using QuantileFn = std::function<double(double)>;
  using DensityAtQuantileFn = std::function<double(double)>;

  static Distribution uniform(double a, double b);
  static Distribution exponential(double rate);
  /// Survival function (1 - x)^b on (0, 1).
  static Distribution power_survival(double b);
  /// Quantile-form distribution. The cdf is recovered by monotone inversion
  /// of `quantile`, the pdf as density_at_quantile(cdf(x)).
  static Distribution custom(QuantileFn quantile, DensityAtQuantileFn density_at_quantile,
                             double support_lower, double support_upper,
                             std::string label = "custom");

  double cdf(double x) const;
  double pdf(double x) const;
  /// Throws DomainError unless 0 < u < 1.
  double quantile(double u) const;
  /// f(F^-1(u)); closed form for the parametric families. A zero density is
  /// returned as-is and left for the caller to treat as a singularity.
  double pdf_at_quantile(double u) const;

  double support_lower() const;
  double support_upper() const;
  Family family() const;
  const std::vector<double>& parameters() const;
  bool has_closed_pdf_at_quantile() const;

  /// Specification string, e.g. "exp:2" or "transform:exp_minus_one(uniform:0,1)".
  std::string describe() const;

  /// Same parametric family and parameters, or the same underlying object.
  bool operator==(const Distribution& other) const;

 private:
  explicit Distribution(std::shared_ptr<const detail::DistributionModel> model);
  friend Distribution transform(const Distribution& d, const Transformation& t,
                                std::size_t grid_points);

  std::shared_ptr<const detail::DistributionModel> model_;
};

double quantile(const Distribution& d, double u);
double pdf_at_quantile(const Distribution& d, double u);

/// Distribution of Y = psi(X). Requires d.support_lower() >= 0, psi(0) == 0
/// and psi strictly increasing with positive derivative on a grid of
/// `grid_points` quantiles of d; throws InvalidTransformError otherwise.
Distribution transform(const Distribution& d, const Transformation& t,
                       std::size_t grid_points = 512);

}  // namespace gwcx
