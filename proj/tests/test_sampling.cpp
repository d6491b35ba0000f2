#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gwcx/error.hpp"
#include "gwcx/sampling.hpp"

using namespace gwcx;

namespace {

const Distribution U = Distribution::uniform(0, 1);

double mean_of_unit(Design des, std::size_t n, std::size_t unit, GenerationRoute route) {
  const auto samples = replicate(U, des, n, 7, 100000, route, true);
  double acc = 0.0;
  for (const auto& s : samples) acc += s.raw_order[unit];
  return acc / static_cast<double>(samples.size());
}

}  // namespace

TEST_CASE("uniforms lie strictly inside (0, 1)") {
  std::mt19937_64 eng(0);
  for (int k = 0; k < 10000; ++k) {
    const double u = unit_uniform(eng);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("order-statistic means") {
  CHECK(mean_of_unit(Design::min_rssu, 3, 1, GenerationRoute::inverse_cdf) ==
        doctest::Approx(1.0 / 3).epsilon(0.015));
  CHECK(mean_of_unit(Design::max_rssu, 3, 2, GenerationRoute::inverse_cdf) ==
        doctest::Approx(0.75).epsilon(0.007));
  CHECK(mean_of_unit(Design::min_rssu, 3, 1, GenerationRoute::literal) ==
        doctest::Approx(1.0 / 3).epsilon(0.015));
  CHECK(mean_of_unit(Design::max_rssu, 3, 2, GenerationRoute::literal) ==
        doctest::Approx(0.75).epsilon(0.007));
}

TEST_CASE("srs with one unit maps the first uniform") {
  const auto d = Distribution::exponential(2);
  std::mt19937_64 eng(99);
  const double expected = d.quantile(unit_uniform(eng));
  const auto s = draw_design(d, Design::srs, 1, 99);
  REQUIRE(s.values.size() == 1);
  CHECK(s.values[0] == expected);
}

TEST_CASE("determinism") {
  const auto a = replicate(U, Design::srs, 10, 42, 2);
  const auto b = replicate(U, Design::srs, 10, 42, 2, GenerationRoute::inverse_cdf, true);
  REQUIRE(a.size() == 2);
  CHECK(a[0].raw_order == b[0].raw_order);
  CHECK(a[1].raw_order == b[1].raw_order);
  CHECK(a[0].raw_order != a[1].raw_order);

  const auto one = replicate(U, Design::max_rssu, 5, 42, 1);
  CHECK(one[0].raw_order == draw_design(U, Design::max_rssu, 5, derive_seed(42, 0)).raw_order);
}

TEST_CASE("derived seeds are distinct") {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t r = 0; r < 1000; ++r) seeds.push_back(derive_seed(5, r));
  std::sort(seeds.begin(), seeds.end());
  CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
}

TEST_CASE("sample invariants") {
  const auto s = draw_design(Distribution::exponential(1), Design::min_rssu, 8, 3);
  CHECK(s.n == 8);
  CHECK(std::is_sorted(s.values.begin(), s.values.end()));
  auto raw = s.raw_order;
  std::sort(raw.begin(), raw.end());
  CHECK(raw == s.values);
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(draw_design(U, Design::srs, 0, 1), DomainError);
  CHECK_THROWS_AS(draw_design(U, Design::single, 3, 1), DomainError);
}
