#ifndef GWCX_H
#define GWCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GWCX_BUILDING_LIBRARY)
#    define GWCX_API __declspec(dllexport)
#  else
#    define GWCX_API __declspec(dllimport)
#  endif
#else
#  define GWCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gwcx_status {
  GWCX_OK = 0,
  GWCX_ERR_DOMAIN = 1,
  GWCX_ERR_DIVERGENCE = 2,
  GWCX_ERR_INTEGRAND = 3,
  GWCX_ERR_INSUFFICIENT_DATA = 4,
  GWCX_ERR_BANDWIDTH = 5,
  GWCX_ERR_INVALID_TRANSFORM = 6,
  GWCX_ERR_WEIGHT = 7,
  GWCX_ERR_PARSE = 8,
  GWCX_ERR_EVALUATION = 9,
  GWCX_ERR_INVALID_ARGUMENT = 10,
  GWCX_ERR_BUFFER_TOO_SMALL = 11,
  GWCX_ERR_INTERNAL = 12
} gwcx_status;

typedef enum gwcx_variant {
  GWCX_PAST = 0,
  GWCX_RESIDUAL = 1,
  GWCX_EXTROPY = 2
} gwcx_variant;

typedef enum gwcx_design {
  GWCX_SINGLE = 0,
  GWCX_SRS = 1,
  GWCX_MIN_RSSU = 2,
  GWCX_MAX_RSSU = 3
} gwcx_design;

typedef enum gwcx_order {
  GWCX_ORDER_DISP = 0,
  GWCX_ORDER_CONVEX = 1,
  GWCX_ORDER_STAR = 2,
  GWCX_ORDER_SUPERADDITIVE = 3,
  GWCX_ORDER_ST = 4
} gwcx_order;

typedef struct gwcx_distribution gwcx_distribution;
typedef struct gwcx_weight gwcx_weight;

/* Message of the last failed call on this thread; never NULL. */
GWCX_API const char* gwcx_last_error(void);
GWCX_API const char* gwcx_status_name(gwcx_status status);

/* Distributions. Spec strings: uniform:a,b  exp:lambda  powersurv:b
   transform:exp_minus_one(<base>)  transform:identity(<base>) */
GWCX_API gwcx_status gwcx_distribution_parse(const char* spec, gwcx_distribution** out);
GWCX_API void gwcx_distribution_free(gwcx_distribution* d);
GWCX_API gwcx_status gwcx_cdf(const gwcx_distribution* d, double x, double* out);
GWCX_API gwcx_status gwcx_pdf(const gwcx_distribution* d, double x, double* out);
GWCX_API gwcx_status gwcx_quantile(const gwcx_distribution* d, double u, double* out);
GWCX_API gwcx_status gwcx_pdf_at_quantile(const gwcx_distribution* d, double u, double* out);
GWCX_API gwcx_status gwcx_support(const gwcx_distribution* d, double* lower, double* upper);
/* Writes a NUL-terminated description; *needed receives the full length + 1. */
GWCX_API gwcx_status gwcx_distribution_describe(const gwcx_distribution* d, char* buf,
                                                size_t len, size_t* needed);

/* Weights: power:m  const:c  expdecay:a */
GWCX_API gwcx_status gwcx_weight_parse(const char* spec, gwcx_weight** out);
GWCX_API void gwcx_weight_free(gwcx_weight* w);
GWCX_API gwcx_status gwcx_weight_eval(const gwcx_weight* w, double x, double* out);

typedef struct gwcx_measure_result {
  double value;
  double quadrature_error;
  int has_closed_form;
  double closed_form;
} gwcx_measure_result;

GWCX_API gwcx_status gwcx_measure(const gwcx_distribution* d, const gwcx_weight* w,
                                  gwcx_variant variant, gwcx_design design, unsigned n,
                                  gwcx_measure_result* out);

typedef double (*gwcx_integrand)(double u, void* user);

typedef struct gwcx_integration_result {
  double value;
  double abs_error_estimate;
  size_t subdivisions;
  int converged;
} gwcx_integration_result;

GWCX_API gwcx_status gwcx_integrate_unit_interval(gwcx_integrand f, void* user,
                                                  double abs_tol, double rel_tol,
                                                  gwcx_integration_result* out);

/* Sampling. `raw` receives the n units in draw order. */
GWCX_API uint64_t gwcx_derive_seed(uint64_t base_seed, uint64_t replicate);
GWCX_API gwcx_status gwcx_draw_design(const gwcx_distribution* d, gwcx_design design, size_t n,
                                      uint64_t seed, double* raw);

typedef enum gwcx_style { GWCX_STEP = 0, GWCX_KERNEL = 1 } gwcx_style;
typedef enum gwcx_kernel { GWCX_GAUSSIAN = 0, GWCX_EPANECHNIKOV = 1 } gwcx_kernel;
typedef enum gwcx_anchor { GWCX_ANCHOR_MIDPOINT = 0, GWCX_ANCHOR_ORDER_STATISTIC = 1 } gwcx_anchor;

typedef struct gwcx_estimator_config {
  gwcx_variant variant;
  double m;
  gwcx_style style;
  gwcx_kernel kernel;
  double bandwidth; /* <= 0 selects Silverman's rule */
  gwcx_anchor anchor;
  int include_head;
} gwcx_estimator_config;

GWCX_API gwcx_estimator_config gwcx_estimator_config_default(void);
GWCX_API gwcx_status gwcx_estimate(const double* observations, size_t count,
                                   const gwcx_estimator_config* cfg, double* out);
/* Bandwidth that gwcx_estimate would use for this data. */
GWCX_API gwcx_status gwcx_resolve_bandwidth(const double* observations, size_t count,
                                            const gwcx_estimator_config* cfg, double* out);

typedef struct gwcx_convergence_row {
  size_t sample_size;
  gwcx_design design;
  gwcx_variant variant;
  double estimate;
  double truth;
  double abs_err;
  double rel_err;
  uint64_t seed;
} gwcx_convergence_row;

/* Fills rows[0 .. n_sizes * seeds); rows sorted by (sample_size, seed). */
GWCX_API gwcx_status gwcx_converge(const gwcx_distribution* d, const gwcx_estimator_config* cfg,
                                   gwcx_design design, const size_t* sizes, size_t n_sizes,
                                   size_t seeds, uint64_t base_seed, gwcx_convergence_row* rows,
                                   size_t rows_capacity);

typedef struct gwcx_order_verdict {
  int holds_x_le_y;
  size_t grid;
  double worst_violation;
} gwcx_order_verdict;

GWCX_API gwcx_status gwcx_check_order(gwcx_order kind, const gwcx_distribution* x,
                                      const gwcx_distribution* y, size_t grid_points,
                                      gwcx_order_verdict* out);

/* Runs the built-in theorem suite. *json receives a heap string to be
   released with gwcx_string_free; *gated_failures counts theorems whose
   hypotheses hold but whose conclusion fails. */
GWCX_API gwcx_status gwcx_verify_default_suite(char** json, size_t* gated_failures);
GWCX_API void gwcx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
