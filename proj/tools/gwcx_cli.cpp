#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwcx/gwcx.h"
#include "json.hpp"

namespace {

constexpr int kExitGatedFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(gwcx_status s) {
  switch (s) {
    case GWCX_ERR_DIVERGENCE:
    case GWCX_ERR_INTEGRAND:
      return kExitDivergence;
    case GWCX_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

void check(gwcx_status s, const std::string& context) {
  if (s == GWCX_OK) return;
  throw Failure{exit_code_for(s),
                context + ": " + gwcx_status_name(s) + ": " + gwcx_last_error()};
}

struct DistributionHandle {
  std::unique_ptr<gwcx_distribution, decltype(&gwcx_distribution_free)> p{nullptr,
                                                                        gwcx_distribution_free};
  explicit DistributionHandle(const std::string& spec) {
    gwcx_distribution* raw = nullptr;
    check(gwcx_distribution_parse(spec.c_str(), &raw), "--dist");
    p.reset(raw);
  }
  const gwcx_distribution* get() const { return p.get(); }
};

struct WeightHandle {
  std::unique_ptr<gwcx_weight, decltype(&gwcx_weight_free)> p{nullptr, gwcx_weight_free};
  explicit WeightHandle(const std::string& spec) {
    gwcx_weight* raw = nullptr;
    check(gwcx_weight_parse(spec.c_str(), &raw), "--weight");
    p.reset(raw);
  }
  const gwcx_weight* get() const { return p.get(); }
};

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot open output file '" + out_path + "'"};
  f << text;
  if (!f) throw Failure{kExitInternal, "failed writing '" + out_path + "'"};
}

const std::map<std::string, gwcx_variant> kVariants{
    {"past", GWCX_PAST}, {"residual", GWCX_RESIDUAL}, {"extropy", GWCX_EXTROPY}};
const std::map<std::string, gwcx_design> kDesigns{{"single", GWCX_SINGLE},
                                                  {"srs", GWCX_SRS},
                                                  {"minrssu", GWCX_MIN_RSSU},
                                                  {"maxrssu", GWCX_MAX_RSSU}};
const std::map<std::string, gwcx_style> kStyles{{"step", GWCX_STEP}, {"kernel", GWCX_KERNEL}};
const std::map<std::string, gwcx_kernel> kKernels{{"gaussian", GWCX_GAUSSIAN},
                                                  {"epanechnikov", GWCX_EPANECHNIKOV}};
const std::map<std::string, gwcx_anchor> kAnchors{
    {"midpoint", GWCX_ANCHOR_MIDPOINT}, {"order-statistic", GWCX_ANCHOR_ORDER_STATISTIC}};

std::string design_label(gwcx_design d) {
  for (const auto& [k, v] : kDesigns) {
    if (v == d) return k;
  }
  return "unknown";
}

std::string variant_label(gwcx_variant d) {
  for (const auto& [k, v] : kVariants) {
    if (v == d) return k;
  }
  return "unknown";
}

struct EstimatorFlags {
  std::string variant = "past";
  double m = 1.0;
  std::string style = "step";
  std::string kernel = "gaussian";
  std::string bandwidth = "silverman";
  std::string anchor = "midpoint";
  bool include_head = false;

  void attach(CLI::App* app) {
    app->add_option("--variant", variant, "past|residual")
        ->check(CLI::IsMember({"past", "residual"}));
    app->add_option("--m", m, "power-weight exponent m > 0");
    app->add_option("--style", style, "step|kernel")->check(CLI::IsMember({"step", "kernel"}));
    app->add_option("--kernel", kernel, "gaussian|epanechnikov")
        ->check(CLI::IsMember({"gaussian", "epanechnikov"}));
    app->add_option("--bandwidth", bandwidth, "<real>|silverman");
    app->add_option("--anchor", anchor, "midpoint|order-statistic")
        ->check(CLI::IsMember({"midpoint", "order-statistic"}));
    app->add_flag("--include-head", include_head, "add the [0, x_(1)) residual segment");
  }

  gwcx_estimator_config config() const {
    gwcx_estimator_config c = gwcx_estimator_config_default();
    c.variant = kVariants.at(variant);
    c.m = m;
    c.style = kStyles.at(style);
    c.kernel = kKernels.at(kernel);
    c.anchor = kAnchors.at(anchor);
    c.include_head = include_head ? 1 : 0;
    if (bandwidth != "silverman") {
      double h = 0.0;
      const auto res = std::from_chars(bandwidth.data(), bandwidth.data() + bandwidth.size(), h);
      if (res.ec != std::errc{} || res.ptr != bandwidth.data() + bandwidth.size() || !(h > 0.0)) {
        throw Failure{kExitUsage, "--bandwidth must be a positive number or 'silverman'"};
      }
      c.bandwidth = h;
    }
    return c;
  }
};

std::vector<double> read_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitUsage, "cannot open input file '" + path + "'"};
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "i,value") continue;
    const auto comma = line.find(',');
    const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
      throw Failure{kExitUsage, path + ":" + std::to_string(lineno) + ": not a number: '" +
                                    field + "'"};
    }
    values.push_back(v);
  }
  return values;
}

int run_measure(const std::string& dist, const std::string& weight, const std::string& variant,
                const std::string& design, unsigned n, const std::string& out) {
  DistributionHandle d(dist);
  WeightHandle w(weight);
  gwcx_measure_result r{};
  check(gwcx_measure(d.get(), w.get(), kVariants.at(variant), kDesigns.at(design), n, &r),
        "measure");
  nlohmann::json j;
  j["value"] = json_number(r.value);
  if (r.has_closed_form) j["closed_form"] = json_number(r.closed_form);
  j["quadrature_error"] = json_number(r.quadrature_error);
  emit(out, j.dump(2) + "\n");
  return 0;
}

int run_simulate(const std::string& dist, const std::string& design, std::size_t n,
                 std::uint64_t seed, const std::string& out) {
  DistributionHandle d(dist);
  std::vector<double> raw(n);
  check(gwcx_draw_design(d.get(), kDesigns.at(design), n, seed, raw.data()), "simulate");
  std::string csv = "i,value\n";
  for (std::size_t i = 0; i < raw.size(); ++i) {
    csv += std::to_string(i + 1) + "," + shortest(raw[i]) + "\n";
  }
  emit(out, csv);
  return 0;
}

int run_estimate(const EstimatorFlags& flags, const std::string& input, const std::string& out) {
  const auto values = read_sample(input);
  const gwcx_estimator_config c = flags.config();
  double value = 0.0;
  check(gwcx_estimate(values.data(), values.size(), &c, &value), "estimate");
  nlohmann::json cfg{{"variant", flags.variant},
                     {"m", json_number(flags.m)},
                     {"style", flags.style},
                     {"include_head", flags.include_head},
                     {"n", values.size()}};
  if (c.style == GWCX_KERNEL) {
    double h = 0.0;
    check(gwcx_resolve_bandwidth(values.data(), values.size(), &c, &h), "bandwidth");
    cfg["kernel"] = flags.kernel;
    cfg["anchor"] = flags.anchor;
    cfg["bandwidth"] = json_number(h);
    cfg["bandwidth_rule"] = flags.bandwidth == "silverman" ? "silverman" : "fixed";
  }
  nlohmann::json j{{"value", json_number(value)}, {"config", std::move(cfg)}};
  emit(out, j.dump(2) + "\n");
  return 0;
}

int run_verify(const std::string& out) {
  char* json = nullptr;
  std::size_t gated = 0;
  check(gwcx_verify_default_suite(&json, &gated), "verify");
  std::string text(json);
  gwcx_string_free(json);
  emit(out, text + "\n");
  if (gated > 0) {
    std::cerr << "verify: " << gated << " theorem(s) failed with their hypotheses satisfied\n";
    return kExitGatedFailure;
  }
  return 0;
}

int run_converge(const std::string& dist, const std::string& design, const EstimatorFlags& flags,
                 const std::vector<std::size_t>& sizes, std::size_t seeds, std::uint64_t base_seed,
                 const std::string& out) {
  DistributionHandle d(dist);
  const gwcx_estimator_config c = flags.config();
  std::vector<gwcx_convergence_row> rows(sizes.size() * seeds);
  check(gwcx_converge(d.get(), &c, kDesigns.at(design), sizes.data(), sizes.size(), seeds,
                      base_seed, rows.data(), rows.size()),
        "converge");
  std::string csv = "sample_size,design,variant,estimate,truth,abs_err,rel_err,seed\n";
  for (const auto& r : rows) {
    csv += std::to_string(r.sample_size) + "," + design_label(r.design) + "," +
           variant_label(r.variant) + "," + shortest(r.estimate) + "," + shortest(r.truth) + "," +
           shortest(r.abs_err) + "," + shortest(r.rel_err) + "," + std::to_string(r.seed) + "\n";
  }
  emit(out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted cumulative extropy measures for SRS and ranked set sampling designs"};
  app.require_subcommand(1);

  std::string dist = "uniform:0,1";
  std::string weight = "power:1";
  std::string variant = "past";
  std::string design = "srs";
  unsigned n = 1;
  std::uint64_t seed = 1;
  std::string out;

  auto* measure = app.add_subcommand("measure", "compute a measure by quadrature");
  measure->add_option("--dist", dist, "distribution spec")->required();
  measure->add_option("--weight", weight, "weight spec");
  measure->add_option("--variant", variant, "past|residual|extropy")
      ->check(CLI::IsMember({"past", "residual", "extropy"}));
  measure->add_option("--design", design, "single|srs|minrssu|maxrssu")
      ->check(CLI::IsMember({"single", "srs", "minrssu", "maxrssu"}));
  measure->add_option("--n", n, "number of units")->check(CLI::PositiveNumber);
  measure->add_option("--out", out, "output path (default stdout)");

  std::size_t sim_n = 10;
  auto* simulate = app.add_subcommand("simulate", "draw one design sample as CSV");
  simulate->add_option("--dist", dist, "distribution spec")->required();
  simulate->add_option("--design", design, "srs|minrssu|maxrssu")
      ->check(CLI::IsMember({"srs", "minrssu", "maxrssu"}));
  simulate->add_option("--n", sim_n, "number of units")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "64-bit seed");
  simulate->add_option("--out", out, "output path (default stdout)");

  EstimatorFlags est_flags;
  std::string input;
  auto* estimate = app.add_subcommand("estimate", "estimate a measure from sample data");
  est_flags.attach(estimate);
  estimate->add_option("--input", input, "sample CSV")->required();
  estimate->add_option("--out", out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the theorem verification suite");
  verify->add_option("--out", out, "output path (default stdout)");

  EstimatorFlags conv_flags;
  std::vector<std::size_t> sizes{100, 1000, 10000};
  std::size_t seeds = 50;
  auto* converge = app.add_subcommand("converge", "estimator convergence study as CSV");
  converge->add_option("--dist", dist, "distribution spec")->required();
  converge->add_option("--design", design, "srs")->check(CLI::IsMember({"srs"}));
  conv_flags.attach(converge);
  converge->add_option("--sizes", sizes, "sample-size ladder")->delimiter(',');
  converge->add_option("--seeds", seeds, "replicates per size")->check(CLI::PositiveNumber);
  converge->add_option("--seed", seed, "base seed");
  converge->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*measure) return run_measure(dist, weight, variant, design, n, out);
    if (*simulate) return run_simulate(dist, design, sim_n, seed, out);
    if (*estimate) return run_estimate(est_flags, input, out);
    if (*verify) return run_verify(out);
    if (*converge) return run_converge(dist, design, conv_flags, sizes, seeds, seed, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
