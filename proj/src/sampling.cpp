#include "gwcx/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "gwcx/error.hpp"
#include "parallel.hpp"

namespace gwcx {

namespace {

constexpr double kLowest = 0x1.0p-1074;

double clamp_open(double u) {
  if (!(u > 0.0)) return kLowest;
  if (!(u < 1.0)) return std::nextafter(1.0, 0.0);
  return u;
}

double draw_unit(const Distribution& d, Design design, std::size_t i, std::mt19937_64& engine,
                 GenerationRoute route) {
  if (design == Design::srs) return d.quantile(unit_uniform(engine));

  if (route == GenerationRoute::literal) {
    double best = d.quantile(unit_uniform(engine));
    for (std::size_t k = 1; k < i; ++k) {
      const double x = d.quantile(unit_uniform(engine));
      best = design == Design::min_rssu ? std::min(best, x) : std::max(best, x);
    }
    return best;
  }

  const double u = unit_uniform(engine);
  const double inv_i = 1.0 / static_cast<double>(i);
  // F_{1:i}^{-1}(u) = F^{-1}(1 - (1-u)^{1/i}),  F_{i:i}^{-1}(u) = F^{-1}(u^{1/i})
  const double v = design == Design::min_rssu ? -std::expm1(std::log1p(-u) * inv_i)
                                              : std::exp(std::log(u) * inv_i);
  return d.quantile(clamp_open(v));
}

}  // namespace

double unit_uniform(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replicate) {
  std::uint64_t z = base_seed + (replicate + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Sample draw_design(const Distribution& d, Design design, std::size_t n, std::uint64_t seed,
                   GenerationRoute route) {
  if (n == 0) throw DomainError("draw_design: n must be at least 1");
  if (design == Design::single) {
    throw DomainError("draw_design: choose srs, minrssu or maxrssu");
  }
  std::mt19937_64 engine(seed);
  Sample s;
  s.design = design;
  s.n = n;
  s.seed = seed;
  s.raw_order.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    s.raw_order.push_back(draw_unit(d, design, i, engine, route));
  }
  s.values = s.raw_order;
  std::sort(s.values.begin(), s.values.end());
  return s;
}

std::vector<Sample> replicate(const Distribution& d, Design design, std::size_t n,
                              std::uint64_t base_seed, std::size_t replicates,
                              GenerationRoute route, bool parallel) {
  if (replicates == 0) throw DomainError("replicate: need at least one replicate");
  std::vector<Sample> out(replicates);
  auto work = [&](std::size_t r) {
    out[r] = draw_design(d, design, n, derive_seed(base_seed, r), route);
  };
  if (!parallel) {
    for (std::size_t r = 0; r < replicates; ++r) work(r);
    return out;
  }

  detail::parallel_for(replicates, work);
  return out;
}

}  // namespace gwcx
