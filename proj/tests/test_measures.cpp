#include <cmath>
#include <string>

#include "doctest.h"
#include "gwcx/error.hpp"
#include "gwcx/measures.hpp"

using namespace gwcx;

namespace {

const Distribution U = Distribution::uniform(0, 1);

double measure(const Distribution& d, const WeightFunction& w, Variant v, Design des, unsigned n) {
  return gw_design_measure(d, w, MeasureSpec{v, des, n}).value;
}

}  // namespace

TEST_CASE("weighted extropy") {
  CHECK(gwj(U, WeightFunction::constant(1)).value == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(gwj(U, WeightFunction::power(1)).value == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(gwj(Distribution::exponential(1), WeightFunction::constant(1)).value ==
        doctest::Approx(-0.25).epsilon(1e-10));
}

TEST_CASE("single-variable cumulative measures") {
  const auto w = WeightFunction::power(1);
  CHECK(gw_cumulative(U, w, Variant::past).value == doctest::Approx(-0.125).epsilon(1e-10));
  CHECK(gw_cumulative(U, w, Variant::residual).value == doctest::Approx(-1.0 / 24).epsilon(1e-10));
  CHECK(gw_cumulative(Distribution::power_survival(2), w, Variant::residual).value ==
        doctest::Approx(-1.0 / 60).epsilon(1e-10));
}

TEST_CASE("unweighted reduction") {
  const auto one = WeightFunction::constant(1);
  CHECK(gw_cumulative(U, one, Variant::past).value == doctest::Approx(-1.0 / 6).epsilon(1e-10));
  CHECK(gw_cumulative(U, one, Variant::residual).value == doctest::Approx(-1.0 / 6).epsilon(1e-10));
}

TEST_CASE("design measures") {
  const auto w = WeightFunction::power(1);
  CHECK(measure(U, w, Variant::past, Design::srs, 2) == doctest::Approx(-1.0 / 32).epsilon(1e-10));
  CHECK(measure(U, w, Variant::past, Design::max_rssu, 2) ==
        doctest::Approx(-1.0 / 48).epsilon(1e-10));
  CHECK(measure(U, w, Variant::residual, Design::min_rssu, 2) ==
        doctest::Approx(-1.0 / 720).epsilon(1e-10));
  CHECK(measure(Distribution::exponential(1), w, Variant::residual, Design::min_rssu, 2) ==
        doctest::Approx(-1.0 / 128).epsilon(1e-10));
  CHECK(measure(Distribution::exponential(2), w, Variant::residual, Design::min_rssu, 1) ==
        doctest::Approx(-1.0 / 32).epsilon(1e-10));
  CHECK(measure(Distribution::power_survival(1), w, Variant::residual, Design::min_rssu, 1) ==
        doctest::Approx(-1.0 / 24).epsilon(1e-10));
}

TEST_CASE("uniform minRSSU uses Gamma(m+1)^n") {
  const auto w = WeightFunction::power(2);
  const MeasureSpec spec{Variant::residual, Design::min_rssu, 3};
  const double v = gw_design_measure(U, w, spec).value;
  CHECK(v == doctest::Approx(-1.0 / 1587600).epsilon(1e-10));
  REQUIRE(closed_form(U, w, spec));
  CHECK(*closed_form(U, w, spec) == doctest::Approx(-1.0 / 1587600).epsilon(1e-12));
  // Gamma(3)^2 instead of Gamma(3)^3 would be half as large.
  CHECK(v / (-1.0 / 3175200) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("closed forms agree with quadrature") {
  for (double m : {1.0, 2.0, 3.0}) {
    const auto w = WeightFunction::power(m);
    for (unsigned n = 1; n <= 3; ++n) {
      for (const auto& [d, v, des] :
           {std::tuple{U, Variant::past, Design::srs}, std::tuple{U, Variant::residual, Design::srs},
            std::tuple{U, Variant::past, Design::max_rssu},
            std::tuple{U, Variant::residual, Design::min_rssu},
            std::tuple{Distribution::exponential(0.5), Variant::residual, Design::min_rssu},
            std::tuple{Distribution::power_survival(2), Variant::residual, Design::min_rssu}}) {
        const MeasureSpec spec{v, des, n};
        const auto cf = closed_form(d, w, spec);
        REQUIRE(cf);
        CHECK(gw_design_measure(d, w, spec).value == doctest::Approx(*cf).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("closed form registry misses return nothing") {
  CHECK_FALSE(closed_form(U, WeightFunction::exp_decay(1), MeasureSpec{Variant::past, Design::srs, 2}));
}

TEST_CASE("srs with one unit equals the single-variable measure exactly") {
  for (auto v : {Variant::past, Variant::residual}) {
    const auto w = WeightFunction::power(1.5);
    const auto d = Distribution::power_survival(2);
    CHECK(gw_design_measure(d, w, MeasureSpec{v, Design::srs, 1}).value ==
          gw_cumulative(d, w, v).value);
  }
}

TEST_CASE("parallel factors are bit-identical") {
  const auto w = WeightFunction::power(1.5);
  const MeasureSpec spec{Variant::residual, Design::min_rssu, 6};
  MeasureOptions par;
  par.parallel = true;
  CHECK(gw_design_measure(Distribution::exponential(1), w, spec).value ==
        gw_design_measure(Distribution::exponential(1), w, spec, par).value);
}

TEST_CASE("measures are nonpositive") {
  for (const auto& d : {U, Distribution::exponential(1), Distribution::power_survival(0.5),
                        Distribution::power_survival(2)}) {
    for (const auto& w : {WeightFunction::power(1), WeightFunction::exp_decay(2)}) {
      CHECK(gw_cumulative(d, w, Variant::residual).value <= 0.0);
      if (d.parameters() != std::vector<double>{0.5}) CHECK(gwj(d, w).value <= 0.0);
    }
  }
}

TEST_CASE("extropy of an unbounded density diverges") {
  CHECK_THROWS_AS(gwj(Distribution::power_survival(0.5), WeightFunction::constant(1)),
                  DivergenceError);
}

TEST_CASE("past measure on unbounded support diverges") {
  const auto e = Distribution::exponential(1);
  CHECK(diverges_a_priori(e, WeightFunction::power(1), Variant::past));
  CHECK_FALSE(diverges_a_priori(e, WeightFunction::exp_decay(1), Variant::past));
  CHECK_THROWS_AS(gw_cumulative(e, WeightFunction::power(1), Variant::past), DivergenceError);
  try {
    gw_design_measure(e, WeightFunction::power(1), MeasureSpec{Variant::past, Design::max_rssu, 3});
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& err) {
    CHECK(std::string(err.what()).find("i=1") != std::string::npos);
  }
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(MeasureSpec({Variant::past, Design::min_rssu, 2}).validate(), InvalidArgumentError);
  CHECK_THROWS_AS(MeasureSpec({Variant::residual, Design::max_rssu, 2}).validate(),
                  InvalidArgumentError);
  CHECK_THROWS_AS(MeasureSpec({Variant::past, Design::srs, 0}).validate(), InvalidArgumentError);
  CHECK_THROWS_AS(MeasureSpec({Variant::extropy, Design::srs, 2}).validate(), InvalidArgumentError);
}
