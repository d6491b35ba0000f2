#include "doctest.h"
#include "gwcx/error.hpp"
#include "gwcx/parse.hpp"

using namespace gwcx;

TEST_CASE("distribution specs") {
  CHECK(parse_distribution("uniform:0,1") == Distribution::uniform(0, 1));
  CHECK(parse_distribution("exp:2") == Distribution::exponential(2));
  CHECK(parse_distribution(" powersurv:0.5 ") == Distribution::power_survival(0.5));
  const auto t = parse_distribution("transform:exp_minus_one(exp:1)");
  CHECK(t.family() == Family::transformed);
  CHECK(t.describe() == "transform:exp_minus_one(exp:1)");
  CHECK(parse_distribution("transform:identity(uniform:0,1)").quantile(0.3) ==
        doctest::Approx(0.3));
}

TEST_CASE("describe round-trips") {
  for (const char* s : {"uniform:0,1", "exp:0.5", "powersurv:2",
                        "transform:exp_minus_one(uniform:0,1)"}) {
    CHECK(parse_distribution(s).describe() == s);
  }
}

TEST_CASE("malformed distribution specs") {
  CHECK_THROWS_AS(parse_distribution("normal:0,1"), ParseError);
  CHECK_THROWS_AS(parse_distribution("uniform:0"), ParseError);
  CHECK_THROWS_AS(parse_distribution("exp"), ParseError);
  CHECK_THROWS_AS(parse_distribution("exp:abc"), ParseError);
  CHECK_THROWS_AS(parse_distribution("transform:square(exp:1)"), ParseError);
  CHECK_THROWS_AS(parse_distribution("transform:exp_minus_one(exp:1"), ParseError);
  CHECK_THROWS_AS(parse_distribution("exp:-1"), DomainError);
}

TEST_CASE("weights, designs and variants") {
  CHECK(parse_weight("power:2").describe() == "power:2");
  CHECK(parse_weight("const:1").family() == WeightFamily::constant);
  CHECK(parse_weight("expdecay:1").family() == WeightFamily::exp_decay);
  CHECK_THROWS_AS(parse_weight("log:1"), ParseError);
  CHECK(parse_design("maxrssu") == Design::max_rssu);
  CHECK(parse_design("minrssu") == Design::min_rssu);
  CHECK_THROWS_AS(parse_design("rss"), ParseError);
  CHECK(parse_variant("residual") == Variant::residual);
  CHECK_THROWS_AS(parse_variant("future"), ParseError);
}
