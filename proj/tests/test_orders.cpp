#include <cmath>

#include "doctest.h"
#include "gwcx/error.hpp"
#include "gwcx/orders.hpp"
#include "json.hpp"

using namespace gwcx;

namespace {

TheoremCase single_case(TheoremId id, Distribution x, WeightFunction w, unsigned n_min,
                        unsigned n_max) {
  return TheoremCase{id, "case", std::move(x), std::nullopt, std::nullopt, std::move(w),
                     std::nullopt, n_min, n_max};
}

TheoremCase pair_case(TheoremId id, Distribution x, Distribution y, WeightFunction w) {
  return TheoremCase{id, "pair", std::move(x), std::move(y), std::nullopt, w, w, 1, 3};
}

}  // namespace

TEST_CASE("dispersive order of exponentials") {
  const auto fast = Distribution::exponential(1);
  const auto slow = Distribution::exponential(0.5);
  const auto v = check_order(OrderKind::disp, fast, slow, 99);
  CHECK(v.holds_x_le_y);
  CHECK(v.grid == 99);
  CHECK(v.worst_violation >= 0.0);

  const auto r = check_order(OrderKind::disp, slow, fast, 99);
  CHECK_FALSE(r.holds_x_le_y);
  CHECK(r.worst_violation == doctest::Approx(-0.5 * (1 - 1.0 / 100)).epsilon(1e-12));
}

TEST_CASE("every order is reflexive with zero margin") {
  for (const auto& d : {Distribution::uniform(0, 1), Distribution::exponential(2),
                        Distribution::power_survival(0.5)}) {
    for (auto k : {OrderKind::disp, OrderKind::convex_transform, OrderKind::star,
                   OrderKind::superadditive, OrderKind::st}) {
      const auto v = check_order(k, d, d, 50);
      CHECK(v.holds_x_le_y);
      CHECK(v.worst_violation == 0.0);
    }
  }
}

TEST_CASE("shape orders between families") {
  const auto u = Distribution::uniform(0, 1);
  const auto e = Distribution::exponential(1);
  CHECK(check_order(OrderKind::convex_transform, u, e).holds_x_le_y);
  CHECK(check_order(OrderKind::star, u, e).holds_x_le_y);
  CHECK(check_order(OrderKind::superadditive, u, e).holds_x_le_y);
  CHECK_FALSE(check_order(OrderKind::convex_transform, e, u).holds_x_le_y);
  CHECK(check_order(OrderKind::superadditive, u, e, 500).grid <= 64 * 65 / 2);
  CHECK(check_order(OrderKind::st, u, Distribution::uniform(0.5, 1)).holds_x_le_y);
}

TEST_CASE("order preconditions") {
  const auto u = Distribution::uniform(0, 1);
  CHECK_THROWS_AS(check_order(OrderKind::disp, u, u, 5), InvalidArgumentError);
  CHECK_THROWS_AS(check_order(OrderKind::star, Distribution::uniform(0.5, 1), u), DomainError);
  CHECK_NOTHROW(check_order(OrderKind::disp, Distribution::uniform(0.5, 1), u));
}

TEST_CASE("margin classification") {
  CHECK(classify_margin(0.0) == CheckStatus::holds);
  CHECK(classify_margin(-1e-10) == CheckStatus::holds);
  CHECK(classify_margin(-1e-7) == CheckStatus::inconclusive);
  CHECK(classify_margin(-1e-3) == CheckStatus::fails);
}

TEST_CASE("extended margins") {
  ExtendedMeasure finite{-0.1, 0.0, false, {}};
  ExtendedMeasure divergent{-INFINITY, 0.0, true, "x"};
  CHECK(extended_margin(finite, divergent) == INFINITY);
  CHECK(extended_margin(divergent, finite) == -INFINITY);
  CHECK(extended_margin(divergent, divergent) == 0.0);
  const auto e = extended_measure(Distribution::exponential(1), WeightFunction::power(1),
                                  MeasureSpec{Variant::past, Design::srs, 2});
  CHECK(e.divergent);
  CHECK(e.value == -INFINITY);
}

TEST_CASE("minRSSU monotone in n") {
  const auto r = run_theorem(single_case(TheoremId::t6_min_mono, Distribution::uniform(0, 1),
                                         WeightFunction::power(1), 1, 4));
  CHECK(r.status == TheoremStatus::passed);
  CHECK(r.passed);
  CHECK(r.conclusions.size() == 6);
}

TEST_CASE("maxRSSU dominates SRS") {
  const auto r = run_theorem(single_case(TheoremId::t4_max_ge_srs, Distribution::uniform(0, 1),
                                         WeightFunction::power(1), 2, 2));
  CHECK(r.passed);
  CHECK(r.conclusion_margin == doctest::Approx(1.0 / 96).epsilon(1e-9));
}

TEST_CASE("exponential pair is reported beyond the stated hypotheses") {
  const auto r = run_theorem(pair_case(TheoremId::t2_1, Distribution::exponential(1),
                                       Distribution::exponential(0.5), WeightFunction::exp_decay(1)));
  CHECK(r.status == TheoremStatus::beyond_hypotheses);
  CHECK_FALSE(r.gated_failure());
  int held = 0;
  for (const auto& h : r.hypotheses_checked) held += h.passed() ? 1 : 0;
  CHECK(held == static_cast<int>(r.hypotheses_checked.size()) - 1);
}

TEST_CASE("bounded pair satisfies the hypotheses and the conclusions") {
  for (auto id : {TheoremId::t2_1, TheoremId::t2_2, TheoremId::t5_1, TheoremId::t5_3}) {
    const auto r =
        run_theorem(pair_case(id, Distribution::uniform(0.5, 1), Distribution::uniform(0, 1),
                              WeightFunction::exp_decay(1)));
    CHECK(r.status == TheoremStatus::passed);
    CHECK(r.conclusion_margin > 0.0);
  }
}

TEST_CASE("a failed hypothesis never produces a gated failure") {
  const auto r = run_theorem(pair_case(TheoremId::t5_1, Distribution::uniform(0, 1),
                                       Distribution::uniform(0.5, 1), WeightFunction::exp_decay(1)));
  CHECK(r.status == TheoremStatus::beyond_hypotheses);
  CHECK_FALSE(r.gated_failure());
}

TEST_CASE("reflexive theorem margins are zero") {
  const auto x = Distribution::uniform(0.5, 1);
  for (auto id : {TheoremId::t2_1, TheoremId::t2_2, TheoremId::t5_1, TheoremId::t5_3}) {
    const auto r = run_theorem(pair_case(id, x, x, WeightFunction::exp_decay(1)));
    CHECK(r.passed);
    for (const auto& c : r.conclusions) CHECK(std::abs(c.margin) <= 1e-10);
  }
}

TEST_CASE("psi-transform theorems") {
  for (auto id : {TheoremId::t3_psi, TheoremId::t4_max_psi, TheoremId::t4_min_psi}) {
    const TheoremCase c{id, "psi", Distribution::uniform(0, 1), std::nullopt,
                        Transformation::exp_minus_one(), WeightFunction::power(1), std::nullopt, 1, 3};
    const auto r = run_theorem(c);
    CHECK(r.passed);
    CHECK(r.conclusion_margin > 0.0);
  }
}

TEST_CASE("shape orders imply the dispersive order over the registered family") {
  const auto r = shape_order_consistency(registered_order_family());
  CHECK(r.passed);
  CHECK_FALSE(r.conclusions.empty());
}

TEST_CASE("default suite has no gated failures and serialises") {
  SuiteOptions opts;
  opts.parallel = true;
  const auto reports = run_theorem_suite(default_theorem_cases(), opts);
  for (const auto& r : reports) {
    CHECK_FALSE(r.gated_failure());
    CHECK(r.status != TheoremStatus::error);
  }
  const auto j = nlohmann::json::parse(reports_to_json(reports));
  REQUIRE(j.is_array());
  CHECK(j.size() == reports.size());
  CHECK(j[0].contains("hypotheses_checked"));
  CHECK(j[0].contains("conclusion_margin"));
}

TEST_CASE("suite order does not depend on scheduling") {
  SuiteOptions par;
  par.parallel = true;
  CHECK(reports_to_json(run_theorem_suite(default_theorem_cases())) ==
        reports_to_json(run_theorem_suite(default_theorem_cases(), par)));
}
