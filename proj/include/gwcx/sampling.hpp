#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gwcx/distributions.hpp"
#include "gwcx/measures.hpp"

namespace gwcx {

// Samples are generated with std::mt19937_64 (bit-exact across conforming
// implementations) seeded directly with the 64-bit seed. Uniforms are built
// from the top 53 bits as ((x >> 11) + 0.5) * 2^-53, which lies strictly
// inside (0, 1). Replicate r of a study with base seed s draws from
// derive_seed(s, r), a SplitMix64 finalisation of s + (r + 1) * golden-gamma.

/// Open-interval uniform variate from one 64-bit draw.
double unit_uniform(std::mt19937_64& engine);

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replicate);

/// inverse_cdf draws one uniform per unit and maps it through the quantile
/// of the unit's order statistic; literal draws i parents and keeps the
/// min / max.
enum class GenerationRoute { inverse_cdf, literal };

struct Sample {
  std::vector<double> values;     // ascending
  std::vector<double> raw_order;  // unit i = 1..n in draw order
  Design design = Design::srs;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// One-cycle SRS, minRSSU (Z_i = min of i draws) or maxRSSU (Y_i = max of
/// i draws) sample. Throws DomainError for n == 0 or design == single.
Sample draw_design(const Distribution& d, Design design, std::size_t n, std::uint64_t seed,
                   GenerationRoute route = GenerationRoute::inverse_cdf);

/// `replicates` samples; entry r uses derive_seed(base_seed, r). The result
/// does not depend on `parallel`.
std::vector<Sample> replicate(const Distribution& d, Design design, std::size_t n,
                              std::uint64_t base_seed, std::size_t replicates,
                              GenerationRoute route = GenerationRoute::inverse_cdf,
                              bool parallel = false);

}  // namespace gwcx
