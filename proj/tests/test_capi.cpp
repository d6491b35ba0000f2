#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "gwcx/gwcx.h"

namespace {

gwcx_distribution* dist(const char* spec) {
  gwcx_distribution* d = nullptr;
  REQUIRE(gwcx_distribution_parse(spec, &d) == GWCX_OK);
  return d;
}

gwcx_weight* weight(const char* spec) {
  gwcx_weight* w = nullptr;
  REQUIRE(gwcx_weight_parse(spec, &w) == GWCX_OK);
  return w;
}

double square(double u, void*) { return u * u; }
double scaled(double u, void* user) { return *static_cast<double*>(user) * u; }

}  // namespace

TEST_CASE("distribution handle") {
  gwcx_distribution* d = dist("exp:2");
  double v = 0;
  CHECK(gwcx_quantile(d, 0.5, &v) == GWCX_OK);
  CHECK(v == doctest::Approx(std::log(2.0) / 2));
  CHECK(gwcx_cdf(d, v, &v) == GWCX_OK);
  CHECK(v == doctest::Approx(0.5));
  CHECK(gwcx_pdf_at_quantile(d, 0.5, &v) == GWCX_OK);
  CHECK(v == doctest::Approx(1.0));
  double lo = 0, hi = 0;
  CHECK(gwcx_support(d, &lo, &hi) == GWCX_OK);
  CHECK(lo == 0.0);
  CHECK(std::isinf(hi));

  size_t needed = 0;
  CHECK(gwcx_distribution_describe(d, nullptr, 0, &needed) == GWCX_ERR_BUFFER_TOO_SMALL);
  std::vector<char> buf(needed);
  CHECK(gwcx_distribution_describe(d, buf.data(), buf.size(), &needed) == GWCX_OK);
  CHECK(std::string(buf.data()) == "exp:2");

  CHECK(gwcx_quantile(d, 1.5, &v) == GWCX_ERR_DOMAIN);
  CHECK(std::strlen(gwcx_last_error()) > 0);
  gwcx_distribution_free(d);
}

TEST_CASE("parse errors carry codes") {
  gwcx_distribution* d = nullptr;
  CHECK(gwcx_distribution_parse("gamma:2", &d) == GWCX_ERR_PARSE);
  CHECK(d == nullptr);
  CHECK(std::string(gwcx_status_name(GWCX_ERR_PARSE)) == "parse");
  CHECK(gwcx_distribution_parse(nullptr, &d) == GWCX_ERR_INVALID_ARGUMENT);
  gwcx_weight* w = nullptr;
  CHECK(gwcx_weight_parse("const:-1", &w) == GWCX_ERR_DOMAIN);
}

TEST_CASE("measure with closed form") {
  gwcx_distribution* d = dist("uniform:0,1");
  gwcx_weight* w = weight("power:1");
  gwcx_measure_result r{};
  CHECK(gwcx_measure(d, w, GWCX_PAST, GWCX_MAX_RSSU, 2, &r) == GWCX_OK);
  CHECK(r.value == doctest::Approx(-1.0 / 48).epsilon(1e-10));
  CHECK(r.has_closed_form == 1);
  CHECK(r.closed_form == doctest::Approx(-1.0 / 48).epsilon(1e-14));
  CHECK(gwcx_measure(d, w, GWCX_PAST, GWCX_MIN_RSSU, 2, &r) == GWCX_ERR_INVALID_ARGUMENT);
  gwcx_weight_free(w);
  gwcx_distribution_free(d);
}

TEST_CASE("divergence surfaces as a status") {
  gwcx_distribution* d = dist("exp:1");
  gwcx_weight* w = weight("power:1");
  gwcx_measure_result r{};
  CHECK(gwcx_measure(d, w, GWCX_PAST, GWCX_SRS, 2, &r) == GWCX_ERR_DIVERGENCE);
  CHECK(std::string(gwcx_last_error()).find("i=1") != std::string::npos);
  gwcx_weight_free(w);
  gwcx_distribution_free(d);
}

TEST_CASE("integration callback") {
  gwcx_integration_result r{};
  CHECK(gwcx_integrate_unit_interval(square, nullptr, 0, 0, &r) == GWCX_OK);
  CHECK(r.value == doctest::Approx(1.0 / 3));
  CHECK(r.converged == 1);
  double k = 4;
  CHECK(gwcx_integrate_unit_interval(scaled, &k, 1e-12, 1e-12, &r) == GWCX_OK);
  CHECK(r.value == doctest::Approx(2.0));
}

TEST_CASE("sampling and estimation") {
  gwcx_distribution* d = dist("uniform:0,1");
  std::vector<double> a(20), b(20);
  CHECK(gwcx_draw_design(d, GWCX_MAX_RSSU, a.size(), 11, a.data()) == GWCX_OK);
  CHECK(gwcx_draw_design(d, GWCX_MAX_RSSU, b.size(), 11, b.data()) == GWCX_OK);
  CHECK(a == b);
  CHECK(gwcx_derive_seed(1, 0) != gwcx_derive_seed(1, 1));

  const double xs[] = {0, 1, 2};
  gwcx_estimator_config cfg = gwcx_estimator_config_default();
  double v = 0;
  CHECK(gwcx_estimate(xs, 3, &cfg, &v) == GWCX_OK);
  CHECK(v == doctest::Approx(-13.0 / 36));
  cfg.variant = GWCX_RESIDUAL;
  CHECK(gwcx_estimate(xs, 3, &cfg, &v) == GWCX_OK);
  CHECK(v == doctest::Approx(-7.0 / 36));
  CHECK(gwcx_estimate(xs, 1, &cfg, &v) == GWCX_ERR_INSUFFICIENT_DATA);
  cfg.style = GWCX_KERNEL;
  double h = 0;
  CHECK(gwcx_resolve_bandwidth(xs, 3, &cfg, &h) == GWCX_OK);
  CHECK(h == doctest::Approx(1.06 * std::pow(3.0, -0.2)));
  gwcx_distribution_free(d);
}

TEST_CASE("convergence rows") {
  gwcx_distribution* d = dist("uniform:0,1");
  gwcx_estimator_config cfg = gwcx_estimator_config_default();
  const size_t sizes[] = {20, 40};
  std::vector<gwcx_convergence_row> rows(6);
  CHECK(gwcx_converge(d, &cfg, GWCX_SRS, sizes, 2, 3, 5, rows.data(), 5) ==
        GWCX_ERR_BUFFER_TOO_SMALL);
  CHECK(gwcx_converge(d, &cfg, GWCX_SRS, sizes, 2, 3, 5, rows.data(), rows.size()) == GWCX_OK);
  CHECK(rows[0].sample_size == 20);
  CHECK(rows[5].sample_size == 40);
  CHECK(rows[0].truth == doctest::Approx(-0.125));
  gwcx_distribution_free(d);
}

TEST_CASE("order check and verification suite") {
  gwcx_distribution* x = dist("exp:1");
  gwcx_distribution* y = dist("exp:0.5");
  gwcx_order_verdict v{};
  CHECK(gwcx_check_order(GWCX_ORDER_DISP, x, y, 99, &v) == GWCX_OK);
  CHECK(v.holds_x_le_y == 1);
  CHECK(v.grid == 99);
  gwcx_distribution_free(x);
  gwcx_distribution_free(y);

  char* json = nullptr;
  size_t gated = 99;
  CHECK(gwcx_verify_default_suite(&json, &gated) == GWCX_OK);
  REQUIRE(json != nullptr);
  CHECK(json[0] == '[');
  CHECK(gated == 0);
  gwcx_string_free(json);
}
