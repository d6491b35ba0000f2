#include "gwcx/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwcx/error.hpp"
#include "gwcx/sampling.hpp"
#include "gwcx/weights.hpp"
#include "parallel.hpp"

namespace gwcx {

std::vector<ConvergenceRow> run_convergence(const Distribution& d, const ConvergenceConfig& cfg) {
  if (cfg.design != Design::srs) {
    throw InvalidArgumentError("convergence studies are defined for srs samples only");
  }
  if (cfg.sizes.empty() || cfg.seeds == 0) {
    throw InvalidArgumentError("convergence study needs at least one size and one seed");
  }
  cfg.estimator.validate();
  const double truth =
      gw_cumulative(d, WeightFunction::power(cfg.estimator.m), cfg.estimator.variant).value;

  const std::size_t cells = cfg.sizes.size() * cfg.seeds;
  std::vector<ConvergenceRow> rows(cells);
  auto work = [&](std::size_t k) {
    const std::size_t size = cfg.sizes[k / cfg.seeds];
    const std::uint64_t seed = derive_seed(cfg.base_seed, k % cfg.seeds);
    const Sample s = draw_design(d, cfg.design, size, seed);
    ConvergenceRow& row = rows[k];
    row.sample_size = size;
    row.design = cfg.design;
    row.variant = cfg.estimator.variant;
    row.estimate = estimate(s.values, cfg.estimator);
    row.truth = truth;
    row.abs_err = std::abs(row.estimate - truth);
    row.rel_err = truth != 0.0 ? row.abs_err / std::abs(truth)
                               : std::numeric_limits<double>::quiet_NaN();
    row.seed = seed;
  };
  if (cfg.parallel) {
    detail::parallel_for(cells, work);
  } else {
    for (std::size_t k = 0; k < cells; ++k) work(k);
  }
  std::sort(rows.begin(), rows.end(), [](const ConvergenceRow& a, const ConvergenceRow& b) {
    return a.sample_size != b.sample_size ? a.sample_size < b.sample_size : a.seed < b.seed;
  });
  return rows;
}

double median_rel_err(const std::vector<ConvergenceRow>& rows, std::size_t sample_size) {
  std::vector<double> errs;
  for (const auto& r : rows) {
    if (r.sample_size == sample_size) errs.push_back(r.rel_err);
  }
  if (errs.empty()) throw InvalidArgumentError("no rows for the requested sample size");
  std::sort(errs.begin(), errs.end());
  const std::size_t mid = errs.size() / 2;
  return errs.size() % 2 ? errs[mid] : 0.5 * (errs[mid - 1] + errs[mid]);
}

}  // namespace gwcx
