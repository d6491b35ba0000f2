#include "gwcx/gwcx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "gwcx/convergence.hpp"
#include "gwcx/distributions.hpp"
#include "gwcx/error.hpp"
#include "gwcx/estimators.hpp"
#include "gwcx/measures.hpp"
#include "gwcx/orders.hpp"
#include "gwcx/parse.hpp"
#include "gwcx/quadrature.hpp"
#include "gwcx/sampling.hpp"
#include "gwcx/weights.hpp"

struct gwcx_distribution {
  gwcx::Distribution d;
};

struct gwcx_weight {
  gwcx::WeightFunction w;
};

namespace {

thread_local std::string last_error;

gwcx_status fail(gwcx_status status, const char* what) {
  last_error = what;
  return status;
}

template <class Fn>
gwcx_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return GWCX_OK;
  } catch (const gwcx::Error& e) {
    return fail(static_cast<gwcx_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GWCX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GWCX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GWCX_ERR_INTERNAL, "unknown exception");
  }
}

#define GWCX_REQUIRE(cond)                                                   \
  do {                                                                       \
    if (!(cond)) return fail(GWCX_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

gwcx::Variant to_variant(gwcx_variant v) {
  switch (v) {
    case GWCX_PAST: return gwcx::Variant::past;
    case GWCX_RESIDUAL: return gwcx::Variant::residual;
    case GWCX_EXTROPY: return gwcx::Variant::extropy;
  }
  throw gwcx::InvalidArgumentError("unknown variant");
}

gwcx::Design to_design(gwcx_design d) {
  switch (d) {
    case GWCX_SINGLE: return gwcx::Design::single;
    case GWCX_SRS: return gwcx::Design::srs;
    case GWCX_MIN_RSSU: return gwcx::Design::min_rssu;
    case GWCX_MAX_RSSU: return gwcx::Design::max_rssu;
  }
  throw gwcx::InvalidArgumentError("unknown design");
}

gwcx_design from_design(gwcx::Design d) {
  switch (d) {
    case gwcx::Design::single: return GWCX_SINGLE;
    case gwcx::Design::srs: return GWCX_SRS;
    case gwcx::Design::min_rssu: return GWCX_MIN_RSSU;
    case gwcx::Design::max_rssu: return GWCX_MAX_RSSU;
  }
  return GWCX_SINGLE;
}

gwcx_variant from_variant(gwcx::Variant v) {
  switch (v) {
    case gwcx::Variant::past: return GWCX_PAST;
    case gwcx::Variant::residual: return GWCX_RESIDUAL;
    case gwcx::Variant::extropy: return GWCX_EXTROPY;
  }
  return GWCX_PAST;
}

gwcx::EstimatorConfig to_config(const gwcx_estimator_config& c) {
  gwcx::EstimatorConfig cfg;
  cfg.variant = to_variant(c.variant);
  cfg.m = c.m;
  cfg.style = c.style == GWCX_KERNEL ? gwcx::EstimatorStyle::kernel : gwcx::EstimatorStyle::step;
  cfg.kernel = c.kernel == GWCX_EPANECHNIKOV ? gwcx::Kernel::epanechnikov : gwcx::Kernel::gaussian;
  if (c.bandwidth > 0.0) cfg.bandwidth = c.bandwidth;
  cfg.anchor = c.anchor == GWCX_ANCHOR_ORDER_STATISTIC ? gwcx::KernelAnchor::order_statistic
                                                       : gwcx::KernelAnchor::midpoint;
  cfg.include_head = c.include_head != 0;
  return cfg;
}

gwcx::OrderKind to_order(gwcx_order k) {
  switch (k) {
    case GWCX_ORDER_DISP: return gwcx::OrderKind::disp;
    case GWCX_ORDER_CONVEX: return gwcx::OrderKind::convex_transform;
    case GWCX_ORDER_STAR: return gwcx::OrderKind::star;
    case GWCX_ORDER_SUPERADDITIVE: return gwcx::OrderKind::superadditive;
    case GWCX_ORDER_ST: return gwcx::OrderKind::st;
  }
  throw gwcx::InvalidArgumentError("unknown order kind");
}

}  // namespace

extern "C" {

const char* gwcx_last_error(void) { return last_error.c_str(); }

const char* gwcx_status_name(gwcx_status status) {
  switch (status) {
    case GWCX_OK: return "ok";
    case GWCX_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case GWCX_ERR_INTERNAL: return "internal";
    default:
      if (status >= GWCX_ERR_DOMAIN && status <= GWCX_ERR_INVALID_ARGUMENT) {
        return gwcx::error_code_name(static_cast<gwcx::ErrorCode>(status));
      }
      return "unknown";
  }
}

gwcx_status gwcx_distribution_parse(const char* spec, gwcx_distribution** out) {
  GWCX_REQUIRE(spec && out);
  *out = nullptr;
  return guarded([&] { *out = new gwcx_distribution{gwcx::parse_distribution(spec)}; });
}

void gwcx_distribution_free(gwcx_distribution* d) { delete d; }

gwcx_status gwcx_cdf(const gwcx_distribution* d, double x, double* out) {
  GWCX_REQUIRE(d && out);
  return guarded([&] { *out = d->d.cdf(x); });
}

gwcx_status gwcx_pdf(const gwcx_distribution* d, double x, double* out) {
  GWCX_REQUIRE(d && out);
  return guarded([&] { *out = d->d.pdf(x); });
}

gwcx_status gwcx_quantile(const gwcx_distribution* d, double u, double* out) {
  GWCX_REQUIRE(d && out);
  return guarded([&] { *out = d->d.quantile(u); });
}

gwcx_status gwcx_pdf_at_quantile(const gwcx_distribution* d, double u, double* out) {
  GWCX_REQUIRE(d && out);
  return guarded([&] { *out = d->d.pdf_at_quantile(u); });
}

gwcx_status gwcx_support(const gwcx_distribution* d, double* lower, double* upper) {
  GWCX_REQUIRE(d && lower && upper);
  *lower = d->d.support_lower();
  *upper = d->d.support_upper();
  return GWCX_OK;
}

gwcx_status gwcx_distribution_describe(const gwcx_distribution* d, char* buf, size_t len,
                                       size_t* needed) {
  GWCX_REQUIRE(d);
  const std::string s = d->d.describe();
  if (needed) *needed = s.size() + 1;
  if (!buf || len < s.size() + 1) {
    return fail(GWCX_ERR_BUFFER_TOO_SMALL, "description buffer too small");
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return GWCX_OK;
}

gwcx_status gwcx_weight_parse(const char* spec, gwcx_weight** out) {
  GWCX_REQUIRE(spec && out);
  *out = nullptr;
  return guarded([&] { *out = new gwcx_weight{gwcx::parse_weight(spec)}; });
}

void gwcx_weight_free(gwcx_weight* w) { delete w; }

gwcx_status gwcx_weight_eval(const gwcx_weight* w, double x, double* out) {
  GWCX_REQUIRE(w && out);
  return guarded([&] { *out = w->w(x); });
}

gwcx_status gwcx_measure(const gwcx_distribution* d, const gwcx_weight* w, gwcx_variant variant,
                         gwcx_design design, unsigned n, gwcx_measure_result* out) {
  GWCX_REQUIRE(d && w && out);
  return guarded([&] {
    const gwcx::MeasureSpec spec{to_variant(variant), to_design(design), n};
    const auto r = gwcx::gw_design_measure(d->d, w->w, spec);
    const auto cf = gwcx::closed_form(d->d, w->w, spec);
    *out = gwcx_measure_result{r.value, r.abs_error_estimate, cf ? 1 : 0, cf ? *cf : 0.0};
  });
}

gwcx_status gwcx_integrate_unit_interval(gwcx_integrand f, void* user, double abs_tol,
                                         double rel_tol, gwcx_integration_result* out) {
  GWCX_REQUIRE(f && out);
  return guarded([&] {
    gwcx::QuadratureOptions opts;
    if (abs_tol > 0.0) opts.abs_tol = abs_tol;
    if (rel_tol > 0.0) opts.rel_tol = rel_tol;
    const auto r = gwcx::integrate_unit_interval([&](double u) { return f(u, user); }, opts);
    *out = gwcx_integration_result{r.value, r.abs_error_estimate, r.subdivisions,
                                   r.converged ? 1 : 0};
  });
}

uint64_t gwcx_derive_seed(uint64_t base_seed, uint64_t replicate) {
  return gwcx::derive_seed(base_seed, replicate);
}

gwcx_status gwcx_draw_design(const gwcx_distribution* d, gwcx_design design, size_t n,
                             uint64_t seed, double* raw) {
  GWCX_REQUIRE(d && raw);
  return guarded([&] {
    const auto s = gwcx::draw_design(d->d, to_design(design), n, seed);
    std::copy(s.raw_order.begin(), s.raw_order.end(), raw);
  });
}

gwcx_estimator_config gwcx_estimator_config_default(void) {
  return gwcx_estimator_config{GWCX_PAST, 1.0, GWCX_STEP, GWCX_GAUSSIAN, 0.0,
                               GWCX_ANCHOR_MIDPOINT, 0};
}

gwcx_status gwcx_estimate(const double* observations, size_t count,
                          const gwcx_estimator_config* cfg, double* out) {
  GWCX_REQUIRE((observations || count == 0) && cfg && out);
  return guarded([&] {
    *out = gwcx::estimate(std::span<const double>(observations, count), to_config(*cfg));
  });
}

gwcx_status gwcx_resolve_bandwidth(const double* observations, size_t count,
                                   const gwcx_estimator_config* cfg, double* out) {
  GWCX_REQUIRE((observations || count == 0) && cfg && out);
  return guarded([&] {
    *out = gwcx::resolve_bandwidth(std::span<const double>(observations, count), to_config(*cfg));
  });
}

gwcx_status gwcx_converge(const gwcx_distribution* d, const gwcx_estimator_config* cfg,
                          gwcx_design design, const size_t* sizes, size_t n_sizes, size_t seeds,
                          uint64_t base_seed, gwcx_convergence_row* rows, size_t rows_capacity) {
  GWCX_REQUIRE(d && cfg && sizes && rows);
  if (rows_capacity < n_sizes * seeds) {
    return fail(GWCX_ERR_BUFFER_TOO_SMALL, "row buffer smaller than sizes x seeds");
  }
  return guarded([&] {
    gwcx::ConvergenceConfig cc;
    cc.design = to_design(design);
    cc.estimator = to_config(*cfg);
    cc.sizes.assign(sizes, sizes + n_sizes);
    cc.seeds = seeds;
    cc.base_seed = base_seed;
    const auto out = gwcx::run_convergence(d->d, cc);
    for (std::size_t k = 0; k < out.size(); ++k) {
      const auto& r = out[k];
      rows[k] = gwcx_convergence_row{r.sample_size, from_design(r.design), from_variant(r.variant),
                                     r.estimate,    r.truth,               r.abs_err,
                                     r.rel_err,     r.seed};
    }
  });
}

gwcx_status gwcx_check_order(gwcx_order kind, const gwcx_distribution* x,
                             const gwcx_distribution* y, size_t grid_points,
                             gwcx_order_verdict* out) {
  GWCX_REQUIRE(x && y && out);
  return guarded([&] {
    const auto v = gwcx::check_order(to_order(kind), x->d, y->d, grid_points);
    *out = gwcx_order_verdict{v.holds_x_le_y ? 1 : 0, v.grid, v.worst_violation};
  });
}

gwcx_status gwcx_verify_default_suite(char** json, size_t* gated_failures) {
  GWCX_REQUIRE(json);
  *json = nullptr;
  return guarded([&] {
    gwcx::SuiteOptions opts;
    opts.parallel = true;
    auto reports = gwcx::run_theorem_suite(gwcx::default_theorem_cases(), opts);
    reports.push_back(gwcx::shape_order_consistency(gwcx::registered_order_family()));
    std::size_t gated = 0;
    for (const auto& r : reports) gated += r.gated_failure() ? 1 : 0;
    const std::string text = gwcx::reports_to_json(reports);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *json = buf;
    if (gated_failures) *gated_failures = gated;
  });
}

void gwcx_string_free(char* s) { std::free(s); }

}  // extern "C"
