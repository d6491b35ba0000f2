#pragma once

#include <cstdint>
#include <vector>

#include "gwcx/distributions.hpp"
#include "gwcx/estimators.hpp"
#include "gwcx/measures.hpp"

namespace gwcx {

struct ConvergenceRow {
  std::size_t sample_size = 0;
  Design design = Design::srs;
  Variant variant = Variant::past;
  double estimate = 0.0;
  double truth = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / |truth|; NaN when truth == 0
  std::uint64_t seed = 0;
};

struct ConvergenceConfig {
  Design design = Design::srs;
  EstimatorConfig estimator{};
  std::vector<std::size_t> sizes{100, 1000, 10000};
  std::size_t seeds = 50;
  std::uint64_t base_seed = 1;
  bool parallel = true;
};

/// One row per (size, replicate). Replicate r draws from
/// derive_seed(base_seed, r); truth is the quadrature value of the
/// estimated measure under the power weight x^m. Rows come back sorted by
/// (size, seed) regardless of scheduling.
std::vector<ConvergenceRow> run_convergence(const Distribution& d, const ConvergenceConfig& cfg);

/// Median of rel_err over the rows of one sample size.
double median_rel_err(const std::vector<ConvergenceRow>& rows, std::size_t sample_size);

}  // namespace gwcx
