#include "gwcx/weights.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "format.hpp"
#include "gwcx/error.hpp"

namespace gwcx {

const char* monotonicity_name(Monotonicity m) noexcept {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::constant: return "constant";
    case Monotonicity::neither: return "neither";
  }
  return "unknown";
}

WeightFunction::WeightFunction(WeightFamily family, double param, MonotonicityHint hint, Fn fn,
                               std::string label)
    : family_(family), param_(param), hint_(hint), fn_(std::move(fn)), label_(std::move(label)) {}

WeightFunction WeightFunction::power(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("power weight: m must be positive");
  return WeightFunction(WeightFamily::power, m, MonotonicityHint::increasing,
                        [m](double x) { return std::pow(x, m); },
                        "power:" + detail::shortest(m));
}

WeightFunction WeightFunction::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("constant weight: c must be >= 0");
  return WeightFunction(WeightFamily::constant, c, MonotonicityHint::unknown,
                        [c](double) { return c; }, "const:" + detail::shortest(c));
}

WeightFunction WeightFunction::exp_decay(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("expdecay weight: a must be positive");
  return WeightFunction(WeightFamily::exp_decay, a, MonotonicityHint::decreasing,
                        [a](double x) { return std::exp(-a * x); },
                        "expdecay:" + detail::shortest(a));
}

WeightFunction WeightFunction::custom(Fn fn, MonotonicityHint hint, std::string label) {
  if (!fn) throw InvalidArgumentError("custom weight requires a callable");
  return WeightFunction(WeightFamily::custom, 0.0, hint, std::move(fn), std::move(label));
}

double WeightFunction::operator()(double x) const {
  if (family_ == WeightFamily::power && x < 0.0) {
    std::ostringstream os;
    os << "power weight evaluated at negative x=" << x;
    throw DomainError(os.str());
  }
  const double v = fn_(x);
  if (!(v >= 0.0)) {
    std::ostringstream os;
    os << "weight '" << label_ << "' returned " << v << " at x=" << x;
    throw WeightError(os.str());
  }
  return v;
}

std::string WeightFunction::describe() const { return label_; }

double eval_weight(const WeightFunction& w, double x) { return w(x); }

Monotonicity check_monotone_weight(const WeightFunction& w, double lo, double hi,
                                   std::size_t grid_points) {
  if (!(lo < hi)) throw InvalidArgumentError("check_monotone_weight: requires lo < hi");
  if (grid_points < 2) throw InvalidArgumentError("check_monotone_weight: needs >= 2 points");

  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  bool rise = false;
  bool fall = false;
  double prev = w(lo);
  for (std::size_t k = 1; k < grid_points; ++k) {
    const double x = (k + 1 == grid_points) ? hi : lo + step * static_cast<double>(k);
    const double v = w(x);
    if (v > prev) rise = true;
    if (v < prev) fall = true;
    prev = v;
  }
  if (rise && fall) return Monotonicity::neither;
  if (rise) return Monotonicity::increasing;
  if (fall) return Monotonicity::decreasing;
  return Monotonicity::constant;
}

bool agrees_with_hint(Monotonicity verdict, MonotonicityHint hint) noexcept {
  switch (hint) {
    case MonotonicityHint::unknown: return true;
    case MonotonicityHint::increasing:
      return verdict == Monotonicity::increasing || verdict == Monotonicity::constant;
    case MonotonicityHint::decreasing:
      return verdict == Monotonicity::decreasing || verdict == Monotonicity::constant;
  }
  return false;
}

}  // namespace gwcx
