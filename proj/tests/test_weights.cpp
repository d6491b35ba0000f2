#include <cmath>

#include "doctest.h"
#include "gwcx/error.hpp"
#include "gwcx/weights.hpp"

using namespace gwcx;

TEST_CASE("evaluation") {
  CHECK(eval_weight(WeightFunction::power(1), 3.0) == 3.0);
  CHECK(eval_weight(WeightFunction::power(2), 0.5) == doctest::Approx(0.25));
  CHECK(eval_weight(WeightFunction::constant(1), 7.0) == 1.0);
  CHECK(eval_weight(WeightFunction::exp_decay(1), 1.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("invalid weights") {
  CHECK_THROWS_AS(WeightFunction::power(0), DomainError);
  CHECK_THROWS_AS(WeightFunction::constant(-1), DomainError);
  CHECK_THROWS_AS(eval_weight(WeightFunction::power(1), -1.0), DomainError);
  const auto neg = WeightFunction::custom([](double x) { return x - 1; });
  CHECK_THROWS_AS(eval_weight(neg, 0.0), WeightError);
}

TEST_CASE("monotonicity verdicts") {
  CHECK(check_monotone_weight(WeightFunction::exp_decay(1), 0, 10, 101) ==
        Monotonicity::decreasing);
  CHECK(check_monotone_weight(WeightFunction::power(1), 0, 10, 101) == Monotonicity::increasing);
  const auto parabola = WeightFunction::custom([](double x) { return (x - 1) * (x - 1); });
  CHECK(check_monotone_weight(parabola, 0, 2, 101) == Monotonicity::neither);
  CHECK(check_monotone_weight(WeightFunction::constant(2), 0, 1, 101) == Monotonicity::constant);
  CHECK_THROWS_AS(check_monotone_weight(WeightFunction::power(1), 1, 0, 101), InvalidArgumentError);
}

TEST_CASE("hints") {
  CHECK(WeightFunction::power(1).hint() == MonotonicityHint::increasing);
  CHECK(WeightFunction::exp_decay(1).hint() == MonotonicityHint::decreasing);
  CHECK(agrees_with_hint(Monotonicity::constant, MonotonicityHint::decreasing));
  CHECK_FALSE(agrees_with_hint(Monotonicity::increasing, MonotonicityHint::decreasing));
  CHECK(WeightFunction::power(1).describe() == "power:1");
}
