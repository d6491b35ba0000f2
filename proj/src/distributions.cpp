#include "gwcx/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "format.hpp"
#include "gwcx/error.hpp"

namespace gwcx {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_probability(double u, const char* op) {
  if (!(u > 0.0 && u < 1.0)) {
    std::ostringstream os;
    os << op << ": probability " << u << " is outside (0,1)";
    throw DomainError(os.str());
  }
}
}  // namespace

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::uniform: return "uniform";
    case Family::exponential: return "exponential";
    case Family::power_survival: return "power_survival";
    case Family::transformed: return "transformed";
    case Family::custom: return "custom";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Transformation

Transformation::Transformation(std::string name, Fn psi, Fn psi_prime, Fn inverse)
    : name_(std::move(name)),
      psi_(std::move(psi)),
      psi_prime_(std::move(psi_prime)),
      inverse_(std::move(inverse)) {
  if (!psi_ || !psi_prime_) {
    throw InvalidArgumentError("transformation requires psi and its derivative");
  }
}

Transformation Transformation::exp_minus_one() {
  return Transformation(
      "exp_minus_one", [](double x) { return std::expm1(x); },
      [](double x) { return std::exp(x); }, [](double y) { return std::log1p(y); });
}

Transformation Transformation::identity() {
  return Transformation(
      "identity", [](double x) { return x; }, [](double) { return 1.0; },
      [](double y) { return y; });
}

double Transformation::inverse(double y, double lo, double hi) const {
  if (inverse_) return inverse_(y);
  if (!(psi_(lo) <= y)) return lo;
  if (std::isinf(hi)) {
    hi = std::max(1.0, lo + 1.0);
    while (psi_(hi) < y) {
      lo = hi;
      hi *= 2.0;
      if (std::isinf(hi)) return hi;
    }
  } else if (!(psi_(hi) >= y)) {
    return hi;
  }
  while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (psi_(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Models

namespace detail {

class DistributionModel {
 public:
  virtual ~DistributionModel() = default;
  virtual double cdf(double x) const = 0;
  virtual double pdf(double x) const = 0;
  virtual double quantile(double u) const = 0;
  virtual double pdf_at_quantile(double u) const = 0;
  virtual bool closed_pdf_at_quantile() const { return true; }
  virtual std::string describe() const = 0;

  Family family;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> params;
};

namespace {

class UniformModel final : public DistributionModel {
 public:
  UniformModel(double a, double b) : a_(a), b_(b) {
    family = Family::uniform;
    lower = a;
    upper = b;
    params = {a, b};
  }
  double cdf(double x) const override {
    if (x <= a_) return 0.0;
    if (x >= b_) return 1.0;
    return (x - a_) / (b_ - a_);
  }
  double pdf(double x) const override {
    return (x >= a_ && x <= b_) ? 1.0 / (b_ - a_) : 0.0;
  }
  double quantile(double u) const override { return a_ + (b_ - a_) * u; }
  double pdf_at_quantile(double) const override { return 1.0 / (b_ - a_); }
  std::string describe() const override {
    return "uniform:" + shortest(a_) + "," + shortest(b_);
  }

 private:
  double a_;
  double b_;
};

class ExponentialModel final : public DistributionModel {
 public:
  explicit ExponentialModel(double rate) : rate_(rate) {
    family = Family::exponential;
    lower = 0.0;
    upper = kInf;
    params = {rate};
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x); }
  double pdf(double x) const override { return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x); }
  double quantile(double u) const override { return -std::log1p(-u) / rate_; }
  double pdf_at_quantile(double u) const override { return rate_ * (1.0 - u); }
  std::string describe() const override { return "exp:" + shortest(rate_); }

 private:
  double rate_;
};

class PowerSurvivalModel final : public DistributionModel {
 public:
  explicit PowerSurvivalModel(double b) : b_(b) {
    family = Family::power_survival;
    lower = 0.0;
    upper = 1.0;
    params = {b};
  }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return -std::expm1(b_ * std::log1p(-x));
  }
  double pdf(double x) const override {
    if (x < 0.0 || x >= 1.0) return 0.0;
    return b_ * std::pow(1.0 - x, b_ - 1.0);
  }
  double quantile(double u) const override {
    return -std::expm1(std::log1p(-u) / b_);
  }
  double pdf_at_quantile(double u) const override {
    return b_ * std::pow(1.0 - u, (b_ - 1.0) / b_);
  }
  std::string describe() const override { return "powersurv:" + shortest(b_); }

 private:
  double b_;
};

class TransformedModel final : public DistributionModel {
 public:
  TransformedModel(Distribution base, Transformation t)
      : base_(std::move(base)), t_(std::move(t)) {
    family = Family::transformed;
    lower = t_(base_.support_lower());
    upper = std::isinf(base_.support_upper()) ? kInf : t_(base_.support_upper());
  }
  double cdf(double y) const override {
    if (y <= lower) return 0.0;
    if (y >= upper) return 1.0;
    return base_.cdf(inverse(y));
  }
  double pdf(double y) const override {
    if (y < lower || y > upper) return 0.0;
    const double x = inverse(y);
    return base_.pdf(x) / t_.derivative(x);
  }
  double quantile(double u) const override { return t_(base_.quantile(u)); }
  double pdf_at_quantile(double u) const override {
    return base_.pdf_at_quantile(u) / t_.derivative(base_.quantile(u));
  }
  bool closed_pdf_at_quantile() const override { return base_.has_closed_pdf_at_quantile(); }
  std::string describe() const override {
    return "transform:" + t_.name() + "(" + base_.describe() + ")";
  }

  const Distribution& base() const { return base_; }
  const Transformation& transformation() const { return t_; }

 private:
  double inverse(double y) const {
    return t_.inverse(y, base_.support_lower(), base_.support_upper());
  }

  Distribution base_;
  Transformation t_;
};

class CustomModel final : public DistributionModel {
 public:
  CustomModel(Distribution::QuantileFn q, Distribution::DensityAtQuantileFn dq,
              double lo, double hi, std::string label)
      : q_(std::move(q)), dq_(std::move(dq)), label_(std::move(label)) {
    family = Family::custom;
    lower = lo;
    upper = hi;
  }
  double cdf(double x) const override {
    if (x <= lower) return 0.0;
    if (x >= upper) return 1.0;
    double a = 0.0;
    double b = 1.0;
    for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
      const double mid = 0.5 * (a + b);
      if (q_(mid) < x) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  }
  double pdf(double x) const override {
    if (x < lower || x > upper) return 0.0;
    double u = cdf(x);
    u = std::min(std::max(u, std::nextafter(0.0, 1.0)), std::nextafter(1.0, 0.0));
    return dq_(u);
  }
  double quantile(double u) const override { return q_(u); }
  double pdf_at_quantile(double u) const override { return dq_(u); }
  std::string describe() const override { return label_; }

 private:
  Distribution::QuantileFn q_;
  Distribution::DensityAtQuantileFn dq_;
  std::string label_;
};

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// Distribution

Distribution::Distribution(std::shared_ptr<const detail::DistributionModel> model)
    : model_(std::move(model)) {}

Distribution Distribution::uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("uniform: requires finite a < b");
  }
  return Distribution(std::make_shared<detail::UniformModel>(a, b));
}

Distribution Distribution::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("exp: rate must be positive");
  return Distribution(std::make_shared<detail::ExponentialModel>(rate));
}

Distribution Distribution::power_survival(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("powersurv: b must be positive");
  return Distribution(std::make_shared<detail::PowerSurvivalModel>(b));
}

Distribution Distribution::custom(QuantileFn quantile, DensityAtQuantileFn density_at_quantile,
                                  double support_lower, double support_upper,
                                  std::string label) {
  if (!quantile || !density_at_quantile) {
    throw InvalidArgumentError("custom distribution needs quantile and density-at-quantile");
  }
  if (!(support_lower < support_upper)) {
    throw DomainError("custom distribution: support_lower must be below support_upper");
  }
  return Distribution(std::make_shared<detail::CustomModel>(
      std::move(quantile), std::move(density_at_quantile), support_lower, support_upper,
      std::move(label)));
}

double Distribution::cdf(double x) const { return model_->cdf(x); }
double Distribution::pdf(double x) const { return model_->pdf(x); }

double Distribution::quantile(double u) const {
  require_probability(u, "quantile");
  return model_->quantile(u);
}

double Distribution::pdf_at_quantile(double u) const {
  require_probability(u, "pdf_at_quantile");
  return model_->pdf_at_quantile(u);
}

double Distribution::support_lower() const { return model_->lower; }
double Distribution::support_upper() const { return model_->upper; }
Family Distribution::family() const { return model_->family; }
const std::vector<double>& Distribution::parameters() const { return model_->params; }
bool Distribution::has_closed_pdf_at_quantile() const { return model_->closed_pdf_at_quantile(); }
std::string Distribution::describe() const { return model_->describe(); }

bool Distribution::operator==(const Distribution& other) const {
  if (model_ == other.model_) return true;
  switch (family()) {
    case Family::uniform:
    case Family::exponential:
    case Family::power_survival:
      return family() == other.family() && parameters() == other.parameters();
    case Family::transformed: {
      if (other.family() != Family::transformed) return false;
      const auto& l = static_cast<const detail::TransformedModel&>(*model_);
      const auto& r = static_cast<const detail::TransformedModel&>(*other.model_);
      const auto& name = l.transformation().name();
      return (name == "exp_minus_one" || name == "identity") &&
             name == r.transformation().name() && l.base() == r.base();
    }
    case Family::custom:
      return false;
  }
  return false;
}

double quantile(const Distribution& d, double u) { return d.quantile(u); }
double pdf_at_quantile(const Distribution& d, double u) { return d.pdf_at_quantile(u); }

Distribution transform(const Distribution& d, const Transformation& t, std::size_t grid_points) {
  if (d.support_lower() < 0.0) {
    throw InvalidTransformError("transform: base distribution must be nonnegative");
  }
  if (t(0.0) != 0.0) {
    throw InvalidTransformError("transform: psi(0) must equal 0 for '" + t.name() + "'");
  }
  if (grid_points < 2) grid_points = 2;

  std::vector<double> xs;
  xs.reserve(grid_points + 1);
  xs.push_back(d.support_lower());
  for (std::size_t k = 1; k <= grid_points; ++k) {
    xs.push_back(d.quantile(static_cast<double>(k) / static_cast<double>(grid_points + 1)));
  }
  double prev = t(xs.front());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double x = xs[k];
    const double slope = t.derivative(x);
    if (!(slope > 0.0)) {
      std::ostringstream os;
      os << "transform: psi'(" << x << ") = " << slope << " is not positive";
      throw InvalidTransformError(os.str());
    }
    if (k > 0) {
      const double y = t(x);
      if (x > xs[k - 1] && !(y > prev)) {
        std::ostringstream os;
        os << "transform: psi is not increasing near x=" << x;
        throw InvalidTransformError(os.str());
      }
      prev = y;
    }
  }
  return Distribution(std::make_shared<detail::TransformedModel>(d, t));
}

}  // namespace gwcx
