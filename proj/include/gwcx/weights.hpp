#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace gwcx {

enum class WeightFamily { power, constant, exp_decay, custom };

enum class MonotonicityHint { increasing, decreasing, unknown };

/// Grid verdict. `constant` means no strict rise and no strict fall was seen,
/// which satisfies both the (weakly) increasing and decreasing hypotheses.
enum class Monotonicity { increasing, decreasing, constant, neither };

const char* monotonicity_name(Monotonicity m) noexcept;

/// Nonnegative weight w(x).
class WeightFunction {
 public:
  using Fn = std::function<double(double)>;

  static WeightFunction power(double m);       // x^m, x >= 0
  static WeightFunction constant(double c);    // c >= 0
  static WeightFunction exp_decay(double a);   // e^{-a x}
  static WeightFunction custom(Fn fn, MonotonicityHint hint = MonotonicityHint::unknown,
                               std::string label = "custom");

  /// Throws DomainError for x < 0 on a power weight and WeightError when a
  /// custom weight returns a negative or NaN value.
  double operator()(double x) const;

  WeightFamily family() const { return family_; }
  double parameter() const { return param_; }
  MonotonicityHint hint() const { return hint_; }
  std::string describe() const;

 private:
  WeightFunction(WeightFamily family, double param, MonotonicityHint hint, Fn fn,
                 std::string label);

  WeightFamily family_;
  double param_;
  MonotonicityHint hint_;
  Fn fn_;
  std::string label_;
};

double eval_weight(const WeightFunction& w, double x);

/// Compares consecutive values on `grid_points` evenly spaced abscissae of
/// [lo, hi].
Monotonicity check_monotone_weight(const WeightFunction& w, double lo, double hi,
                                   std::size_t grid_points = 512);

bool agrees_with_hint(Monotonicity verdict, MonotonicityHint hint) noexcept;

}  // namespace gwcx
