#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "gwcx/error.hpp"
#include "gwcx/orders.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace gwcx {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* check_status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CheckStatus classify_margin(double margin) noexcept {
  if (margin >= -kOrderSlack) return CheckStatus::holds;
  if (margin >= -kInconclusiveBand) return CheckStatus::inconclusive;
  return CheckStatus::fails;
}

const char* theorem_status_name(TheoremStatus s) noexcept {
  switch (s) {
    case TheoremStatus::passed: return "passed";
    case TheoremStatus::failed: return "failed";
    case TheoremStatus::inconclusive: return "inconclusive";
    case TheoremStatus::beyond_hypotheses: return "beyond_hypotheses";
    case TheoremStatus::error: return "error";
  }
  return "unknown";
}

const char* theorem_name(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::t2_1: return "T2.1";
    case TheoremId::t2_2: return "T2.2";
    case TheoremId::t3_psi: return "T3.psi";
    case TheoremId::t4_max_psi: return "T4.max-psi";
    case TheoremId::t4_min_psi: return "T4.min-psi";
    case TheoremId::t4_max_ge_srs: return "T4.max>=SRS";
    case TheoremId::t4_min_ge_srs: return "T4.min>=SRS";
    case TheoremId::t5_1: return "T5.1";
    case TheoremId::t5_3: return "T5.3";
    case TheoremId::t6_min_mono: return "T6.min-mono";
    case TheoremId::t6_max_mono: return "T6.max-mono";
  }
  return "unknown";
}

ExtendedMeasure extended_measure(const Distribution& d, const WeightFunction& w,
                                 const MeasureSpec& spec, const MeasureOptions& opts) {
  ExtendedMeasure out;
  try {
    const MeasureResult r = gw_design_measure(d, w, spec, opts);
    out.value = r.value;
    out.abs_error_estimate = r.abs_error_estimate;
  } catch (const DivergenceError& e) {
    out.value = -kInf;
    out.divergent = true;
    out.diagnostic = e.what();
  }
  return out;
}

double extended_margin(const ExtendedMeasure& lhs, const ExtendedMeasure& rhs) {
  if (lhs.divergent && rhs.divergent) return 0.0;
  return lhs.value - rhs.value;
}

namespace {

struct Context {
  const SuiteOptions& opts;
  TheoremReport report;

  void hypothesis(std::string name, CheckStatus status, double margin, std::string detail = {}) {
    report.hypotheses_checked.push_back(
        HypothesisCheck{std::move(name), status, margin, std::move(detail)});
  }
  void hypothesis_margin(std::string name, double margin, std::string detail = {}) {
    hypothesis(std::move(name), classify_margin(margin), margin, std::move(detail));
  }
  void flag(std::string name, bool ok, std::string detail = {}) {
    hypothesis(std::move(name), ok ? CheckStatus::holds : CheckStatus::fails, ok ? 0.0 : -kInf,
               std::move(detail));
  }

  void conclusion(std::string name, const ExtendedMeasure& lhs, const ExtendedMeasure& rhs) {
    ConclusionCheck c;
    c.name = std::move(name);
    c.margin = extended_margin(lhs, rhs);
    c.error_estimate = lhs.abs_error_estimate + rhs.abs_error_estimate;
    c.status = classify_conclusion(c.margin, c.error_estimate);
    if (lhs.divergent && rhs.divergent) {
      c.detail = "both sides diverge to -inf";
    } else if (lhs.divergent) {
      c.detail = "left side diverges to -inf";
    } else if (rhs.divergent) {
      c.detail = "right side diverges to -inf";
    }
    report.conclusions.push_back(std::move(c));
  }
  void conclusion_value(std::string name, double margin, double err, std::string detail = {}) {
    report.conclusions.push_back(ConclusionCheck{std::move(name), margin, err,
                                                 classify_conclusion(margin, err),
                                                 std::move(detail)});
  }

  static CheckStatus classify_conclusion(double margin, double err) {
    if (margin >= -kOrderSlack) return CheckStatus::holds;
    if (margin + err >= -kOrderSlack) return CheckStatus::inconclusive;
    return CheckStatus::fails;
  }

  ExtendedMeasure measure(const Distribution& d, const WeightFunction& w, Variant v, Design des,
                          unsigned n) const {
    return extended_measure(d, w, MeasureSpec{v, des, n}, opts.measure);
  }

  void finish() {
    auto& r = report;
    r.conclusion_margin = kInf;
    for (const auto& c : r.conclusions) r.conclusion_margin = std::min(r.conclusion_margin, c.margin);
    if (r.conclusions.empty()) r.conclusion_margin = 0.0;

    const auto any_h = [&](CheckStatus s) {
      return std::any_of(r.hypotheses_checked.begin(), r.hypotheses_checked.end(),
                         [&](const HypothesisCheck& h) { return h.status == s; });
    };
    const auto any_c = [&](CheckStatus s) {
      return std::any_of(r.conclusions.begin(), r.conclusions.end(),
                         [&](const ConclusionCheck& c) { return c.status == s; });
    };
    if (any_h(CheckStatus::fails)) {
      r.status = TheoremStatus::beyond_hypotheses;
    } else if (any_h(CheckStatus::inconclusive)) {
      r.status = TheoremStatus::inconclusive;
    } else if (any_c(CheckStatus::fails)) {
      r.status = TheoremStatus::failed;
    } else if (any_c(CheckStatus::inconclusive)) {
      r.status = TheoremStatus::inconclusive;
    } else {
      r.status = TheoremStatus::passed;
    }
    r.passed = r.status == TheoremStatus::passed;
  }
};

// Upper end of the x-range used for weight checks: the support end when it
// is finite, otherwise the last grid quantile.
double check_upper(const Distribution& d, std::size_t grid) {
  if (std::isfinite(d.support_upper())) return d.support_upper();
  return d.quantile(static_cast<double>(grid) / static_cast<double>(grid + 1));
}

std::vector<double> x_grid(const Distribution& d, std::size_t grid) {
  std::vector<double> xs;
  xs.reserve(grid + 1);
  xs.push_back(d.support_lower());
  for (std::size_t k = 1; k <= grid; ++k) {
    xs.push_back(d.quantile(static_cast<double>(k) / static_cast<double>(grid + 1)));
  }
  return xs;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void dispersive_theorem(Context& ctx, const TheoremCase& c) {
  if (!c.y) throw InvalidArgumentError("dispersive-order theorems need a Y distribution");
  const Distribution& x = c.x;
  const Distribution& y = *c.y;
  const WeightFunction& w1 = c.w1;
  const WeightFunction& w2 = c.w2 ? *c.w2 : c.w1;
  const std::size_t grid = ctx.opts.grid_points;

  ctx.flag("X nonnegative", x.support_lower() >= 0.0);
  ctx.flag("Y nonnegative", y.support_lower() >= 0.0);
  const bool endpoint = std::isfinite(x.support_upper()) && x.support_upper() == y.support_upper();
  ctx.flag("common finite right endpoint u_X = u_Y < inf", endpoint,
           endpoint ? "" : "beyond stated hypotheses: u_X=" + fmt(x.support_upper()) +
                               ", u_Y=" + fmt(y.support_upper()));

  const double lo = std::max(0.0, std::min(x.support_lower(), y.support_lower()));
  const double hi = std::max(check_upper(x, grid), check_upper(y, grid));
  const Monotonicity mono = check_monotone_weight(w1, lo, hi, grid);
  ctx.flag("w1 decreasing", mono == Monotonicity::decreasing || mono == Monotonicity::constant,
           std::string("grid verdict ") + monotonicity_name(mono) + " on [" + fmt(lo) + ", " +
               fmt(hi) + "], " + std::to_string(grid) + " points");

  double w_margin = kInf;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid - 1);
    w_margin = std::min(w_margin, w2(t) - w1(t));
  }
  ctx.hypothesis_margin("w1 <= w2", w_margin);

  const OrderVerdict disp = check_order(OrderKind::disp, x, y, grid);
  ctx.hypothesis_margin("X <=_disp Y", disp.worst_violation,
                        std::to_string(disp.grid) + " grid points");

  const bool past = c.id == TheoremId::t2_1 || c.id == TheoremId::t5_1;
  const Variant v = past ? Variant::past : Variant::residual;
  if (c.id == TheoremId::t2_1 || c.id == TheoremId::t2_2) {
    ctx.conclusion(std::string(variant_name(v)) + "(X; w1) >= " + variant_name(v) + "(Y; w2)",
                   ctx.measure(x, w1, v, Design::single, 1), ctx.measure(y, w2, v, Design::single, 1));
    return;
  }
  const Design des = past ? Design::max_rssu : Design::min_rssu;
  for (unsigned n = c.n_min; n <= c.n_max; ++n) {
    ctx.conclusion(std::string(design_name(des)) + " n=" + std::to_string(n) + ": X >= Y",
                   ctx.measure(x, w1, v, des, n), ctx.measure(y, w2, v, des, n));
  }
}

void psi_theorem(Context& ctx, const TheoremCase& c) {
  if (!c.psi) throw InvalidArgumentError("transform theorems need psi");
  const Distribution& x = c.x;
  const Transformation& psi = *c.psi;
  const WeightFunction& w = c.w1;
  const std::size_t grid = ctx.opts.grid_points;

  ctx.flag("X nonnegative", x.support_lower() >= 0.0);
  ctx.flag("psi(0) = 0", psi(0.0) == 0.0);

  const auto xs = x_grid(x, grid);
  double slope = kInf;
  double h_min = kInf;
  double h_max = -kInf;
  for (double t : xs) {
    slope = std::min(slope, psi.derivative(t));
    const double h = w(psi(t)) * psi.derivative(t) - w(t);
    h_min = std::min(h_min, h);
    h_max = std::max(h_max, h);
  }
  ctx.flag("psi increasing (psi' > 0 on grid)", slope > 0.0, "min psi' = " + fmt(slope));

  // w(psi(x)) psi'(x) >= w(x) gives X >= Y; <= gives X <= Y.
  bool x_ge_y = true;
  if (classify_margin(h_min) == CheckStatus::holds) {
    ctx.hypothesis_margin("w(psi(x)) psi'(x) >= w(x)", h_min);
  } else if (classify_margin(-h_max) == CheckStatus::holds) {
    x_ge_y = false;
    ctx.hypothesis_margin("w(psi(x)) psi'(x) <= w(x)", -h_max);
  } else {
    ctx.hypothesis_margin("w(psi(x)) psi'(x) comparable with w(x)", std::min(h_min, -h_max),
                          "sign changes on the grid");
  }

  const Distribution y = transform(x, psi, grid);
  Variant v = Variant::past;
  Design des = Design::srs;
  if (c.id == TheoremId::t4_max_psi) des = Design::max_rssu;
  if (c.id == TheoremId::t4_min_psi) {
    v = Variant::residual;
    des = Design::min_rssu;
  }
  for (unsigned n = c.n_min; n <= c.n_max; ++n) {
    const ExtendedMeasure mx = ctx.measure(x, w, v, des, n);
    const ExtendedMeasure my = ctx.measure(y, w, v, des, n);
    const std::string name = std::string(design_name(des)) + " n=" + std::to_string(n);
    if (x_ge_y) {
      ctx.conclusion(name + ": X >= psi(X)", mx, my);
    } else {
      ctx.conclusion(name + ": X <= psi(X)", my, mx);
    }
  }
}

void dominance_theorem(Context& ctx, const TheoremCase& c) {
  ctx.flag("n >= 2", c.n_min >= 2);
  const bool max = c.id == TheoremId::t4_max_ge_srs;
  const Variant v = max ? Variant::past : Variant::residual;
  const Design des = max ? Design::max_rssu : Design::min_rssu;
  for (unsigned n = c.n_min; n <= c.n_max; ++n) {
    ctx.conclusion(std::string(design_name(des)) + " >= srs, n=" + std::to_string(n),
                   ctx.measure(c.x, c.w1, v, des, n), ctx.measure(c.x, c.w1, v, Design::srs, n));
  }
}

void monotone_theorem(Context& ctx, const TheoremCase& c) {
  const Distribution& x = c.x;
  const WeightFunction& w = c.w1;
  const std::size_t grid = ctx.opts.grid_points;
  double ratio_margin = kInf;
  for (std::size_t k = 1; k <= grid; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(grid + 1);
    ratio_margin = std::min(ratio_margin, 1.0 - w(x.quantile(u)) / x.pdf_at_quantile(u));
  }
  ctx.hypothesis_margin("w(F^-1(u)) / f(F^-1(u)) <= 1", ratio_margin,
                        std::to_string(grid) + " grid points");

  const bool max = c.id == TheoremId::t6_max_mono;
  const Variant v = max ? Variant::past : Variant::residual;
  const Design des = max ? Design::max_rssu : Design::min_rssu;
  // One product evaluation up to n_max yields every prefix value.
  const MeasureResult full = gw_design_measure(x, w, MeasureSpec{v, des, c.n_max}, ctx.opts.measure);
  std::vector<double> values;
  double product = 1.0;
  for (const auto& f : full.factors) {
    product *= f.value;
    values.push_back(-0.5 * product);
  }
  for (unsigned n = std::max(1u, c.n_min); n < c.n_max; ++n) {
    const double err = full.abs_error_estimate;
    ctx.conclusion_value("value(n=" + std::to_string(n + 1) + ") >= value(n=" + std::to_string(n) + ")",
                         values[n] - values[n - 1], err);
    const auto& next = full.factors[n];
    ctx.conclusion_value("ratio(n=" + std::to_string(n) + ") <= 1/(2n+3)",
                         1.0 / (2.0 * n + 3.0) - next.value, next.abs_error_estimate,
                         "ratio " + fmt(next.value));
  }
}

}  // namespace

TheoremReport run_theorem(const TheoremCase& c, const SuiteOptions& opts) {
  Context ctx{opts, {}};
  ctx.report.theorem_id = theorem_name(c.id);
  ctx.report.label = c.label;
  ctx.report.grid = opts.grid_points;
  try {
    switch (c.id) {
      case TheoremId::t2_1:
      case TheoremId::t2_2:
      case TheoremId::t5_1:
      case TheoremId::t5_3:
        dispersive_theorem(ctx, c);
        break;
      case TheoremId::t3_psi:
      case TheoremId::t4_max_psi:
      case TheoremId::t4_min_psi:
        psi_theorem(ctx, c);
        break;
      case TheoremId::t4_max_ge_srs:
      case TheoremId::t4_min_ge_srs:
        dominance_theorem(ctx, c);
        break;
      case TheoremId::t6_min_mono:
      case TheoremId::t6_max_mono:
        monotone_theorem(ctx, c);
        break;
    }
    ctx.finish();
  } catch (const Error& e) {
    ctx.report.status = TheoremStatus::error;
    ctx.report.passed = false;
    ctx.report.notes = std::string(error_code_name(e.code())) + ": " + e.what();
    return ctx.report;
  }
  if (ctx.report.status == TheoremStatus::beyond_hypotheses) {
    ctx.report.notes = "hypotheses not met; conclusions reported, not asserted";
  }
  return ctx.report;
}

std::vector<TheoremReport> run_theorem_suite(const std::vector<TheoremCase>& cases,
                                             const SuiteOptions& opts) {
  std::vector<TheoremReport> out(cases.size());
  auto work = [&](std::size_t i) { out[i] = run_theorem(cases[i], opts); };
  if (opts.parallel) {
    detail::parallel_for(cases.size(), work);
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i) work(i);
  }
  return out;
}

std::vector<Distribution> registered_order_family() {
  const auto psi = Transformation::exp_minus_one();
  return {Distribution::uniform(0.0, 1.0),
          Distribution::exponential(0.5),
          Distribution::exponential(1.0),
          Distribution::exponential(2.0),
          Distribution::power_survival(0.5),
          Distribution::power_survival(2.0),
          transform(Distribution::uniform(0.0, 1.0), psi),
          transform(Distribution::exponential(1.0), psi)};
}

TheoremReport shape_order_consistency(const std::vector<Distribution>& family,
                                 std::size_t grid_points) {
  SuiteOptions opts;
  opts.grid_points = grid_points;
  Context ctx{opts, {}};
  ctx.report.theorem_id = "shape-order-consistency";
  ctx.report.label = "shape order with f(0) >= g(0) > 0 implies dispersive order";
  ctx.report.grid = grid_points;
  std::size_t exercised = 0;
  try {
    for (const auto& x : family) {
      for (const auto& y : family) {
        const double f0 = x.pdf(0.0);
        const double g0 = y.pdf(0.0);
        if (!(f0 >= g0 && g0 > 0.0)) continue;
        for (OrderKind kind :
             {OrderKind::superadditive, OrderKind::star, OrderKind::convex_transform}) {
          const OrderVerdict shape = check_order(kind, x, y, grid_points);
          if (!shape.holds_x_le_y) continue;
          ++exercised;
          const OrderVerdict disp = check_order(OrderKind::disp, x, y, grid_points);
          ctx.conclusion_value(x.describe() + " <=_" + order_name(kind) + " " + y.describe() +
                                   " => disp",
                               disp.worst_violation, 0.0);
        }
      }
    }
    ctx.finish();
  } catch (const Error& e) {
    ctx.report.status = TheoremStatus::error;
    ctx.report.passed = false;
    ctx.report.notes = e.what();
    return ctx.report;
  }
  ctx.report.notes = std::to_string(exercised) + " implications exercised";
  return ctx.report;
}

std::vector<TheoremCase> default_theorem_cases() {
  using D = Distribution;
  using W = WeightFunction;
  std::vector<TheoremCase> cases;
  auto dispersive = [&](TheoremId id, std::string label, D x, D y, W w1, W w2) {
    const unsigned n_max = (id == TheoremId::t5_1 || id == TheoremId::t5_3) ? 4 : 1;
    cases.push_back(TheoremCase{id, std::move(label), std::move(x), std::move(y), std::nullopt,
                                std::move(w1), std::move(w2), 1, n_max});
  };
  for (TheoremId id : {TheoremId::t2_1, TheoremId::t2_2, TheoremId::t5_1, TheoremId::t5_3}) {
    dispersive(id, "X=uniform(0.5,1), Y=uniform(0,1), w=expdecay(1)", D::uniform(0.5, 1.0),
               D::uniform(0.0, 1.0), W::exp_decay(1.0), W::exp_decay(1.0));
    dispersive(id, "X=uniform(0.5,1), Y=powersurv(2), w1=expdecay(1), w2=const(1)",
               D::uniform(0.5, 1.0), D::power_survival(2.0), W::exp_decay(1.0), W::constant(1.0));
    dispersive(id, "X=exp(1), Y=exp(0.5), w=expdecay(1) [unbounded support]", D::exponential(1.0),
               D::exponential(0.5), W::exp_decay(1.0), W::exp_decay(1.0));
  }

  const auto psi = Transformation::exp_minus_one();
  for (TheoremId id : {TheoremId::t3_psi, TheoremId::t4_max_psi, TheoremId::t4_min_psi}) {
    for (const D& x : {D::uniform(0.0, 1.0), D::exponential(1.0)}) {
      cases.push_back(TheoremCase{id, "X=" + x.describe() + ", psi=exp_minus_one, w=power(1)", x,
                                  std::nullopt, psi, W::power(1.0), std::nullopt, 1, 3});
    }
  }

  for (TheoremId id : {TheoremId::t4_max_ge_srs, TheoremId::t4_min_ge_srs}) {
    for (const D& x : {D::uniform(0.0, 1.0), D::power_survival(2.0), D::exponential(1.0)}) {
      for (double m : {1.0, 2.0}) {
        const W w = W::power(m);
        cases.push_back(TheoremCase{id, "X=" + x.describe() + ", w=" + w.describe(), x,
                                    std::nullopt, std::nullopt, w, std::nullopt, 2, 4});
      }
    }
  }

  for (TheoremId id : {TheoremId::t6_min_mono, TheoremId::t6_max_mono}) {
    for (double m : {1.0, 2.0}) {
      const W w = W::power(m);
      cases.push_back(TheoremCase{id, "X=uniform:0,1, w=" + w.describe(), D::uniform(0.0, 1.0),
                                  std::nullopt, std::nullopt, w, std::nullopt, 1, 5});
    }
    cases.push_back(TheoremCase{id, "X=exp:1, w=expdecay:1", D::exponential(1.0), std::nullopt,
                                std::nullopt, W::exp_decay(1.0), std::nullopt, 1, 5});
  }
  return cases;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

std::string reports_to_json(const std::vector<TheoremReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : r.hypotheses_checked) {
      nlohmann::json j{{"name", h.name},
                       {"passed", h.passed()},
                       {"status", check_status_name(h.status)},
                       {"margin", number(h.margin)}};
      if (!h.detail.empty()) j["detail"] = h.detail;
      hyps.push_back(std::move(j));
    }
    nlohmann::json concl = nlohmann::json::array();
    for (const auto& c : r.conclusions) {
      nlohmann::json j{{"name", c.name},
                       {"status", check_status_name(c.status)},
                       {"margin", number(c.margin)},
                       {"error_estimate", number(c.error_estimate)}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      concl.push_back(std::move(j));
    }
    nlohmann::json j{{"theorem_id", r.theorem_id},
                     {"label", r.label},
                     {"status", theorem_status_name(r.status)},
                     {"passed", r.passed},
                     {"hypotheses_checked", std::move(hyps)},
                     {"conclusions", std::move(concl)},
                     {"conclusion_margin", number(r.conclusion_margin)},
                     {"grid", r.grid}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace gwcx
