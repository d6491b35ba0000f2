#include "gwcx/measures.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "gwcx/error.hpp"

namespace gwcx {

const char* variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::past: return "past";
    case Variant::residual: return "residual";
    case Variant::extropy: return "extropy";
  }
  return "unknown";
}

const char* design_name(Design d) noexcept {
  switch (d) {
    case Design::single: return "single";
    case Design::srs: return "srs";
    case Design::min_rssu: return "minrssu";
    case Design::max_rssu: return "maxrssu";
  }
  return "unknown";
}

void MeasureSpec::validate() const {
  if (n == 0) throw InvalidArgumentError("design size n must be at least 1");
  if (design == Design::single && n != 1) {
    throw InvalidArgumentError("design 'single' requires n = 1");
  }
  if (variant == Variant::extropy && design != Design::single) {
    throw InvalidArgumentError("weighted extropy is only defined for design 'single'");
  }
  if (variant == Variant::past && design == Design::min_rssu) {
    throw InvalidArgumentError("the past measure is defined for maxRSSU, not minRSSU");
  }
  if (variant == Variant::residual && design == Design::max_rssu) {
    throw InvalidArgumentError("the residual measure is defined for minRSSU, not maxRSSU");
  }
}

double integrand_value(const Distribution& d, const WeightFunction& w, IntegrandKind kind,
                       double u) {
  const double x = d.quantile(u);
  const double f = d.pdf_at_quantile(u);
  const double wx = w(x);
  switch (kind.tag) {
    case IntegrandTag::extropy_density:
      return wx * f;
    case IntegrandTag::lambda:
      return u * u * wx / f;
    case IntegrandTag::delta: {
      const double s = 1.0 - u;
      return s * s * wx / f;
    }
    case IntegrandTag::psi:
      return std::pow(u, 2.0 * kind.order) * wx / f;
    case IntegrandTag::phi:
      return std::pow(1.0 - u, 2.0 * kind.order) * wx / f;
  }
  return 0.0;
}

IntegrationResult integrate_kind(const Distribution& d, const WeightFunction& w,
                                 IntegrandKind kind, const QuadratureOptions& opts) {
  if ((kind.tag == IntegrandTag::psi || kind.tag == IntegrandTag::phi) && kind.order == 0) {
    throw InvalidArgumentError("psi/phi integrands need an order index >= 1");
  }
  IntegrationResult r;
  try {
    r = integrate_unit_interval([&](double u) { return integrand_value(d, w, kind, u); }, opts);
  } catch (const IntegrandError& e) {
    throw DivergenceError(std::string("singular integrand: ") + e.what());
  }
  if (!r.converged) {
    std::ostringstream os;
    os.precision(6);
    os << "integral did not converge (value " << r.value << ", error estimate "
       << r.abs_error_estimate << " after " << r.subdivisions << " subdivisions)";
    throw DivergenceError(os.str());
  }
  return r;
}

bool diverges_a_priori(const Distribution& d, const WeightFunction& w, Variant variant) {
  const bool non_decaying =
      w.family() == WeightFamily::power ||
      (w.family() == WeightFamily::constant && w.parameter() > 0.0);
  if (!non_decaying) return false;
  if (variant == Variant::past) return std::isinf(d.support_upper());
  if (variant == Variant::residual) return std::isinf(d.support_lower());
  return false;
}

namespace {

void reject_a_priori(const Distribution& d, const WeightFunction& w, Variant variant) {
  if (diverges_a_priori(d, w, variant)) {
    throw DivergenceError(std::string(variant_name(variant)) + " measure of " + d.describe() +
                          " with weight " + w.describe() +
                          " diverges: the support is unbounded and the weight does not decay");
  }
}

MeasureResult single_factor(const Distribution& d, const WeightFunction& w, IntegrandKind kind,
                            const MeasureOptions& opts) {
  MeasureResult out;
  const IntegrationResult r = integrate_kind(d, w, kind, opts.quadrature);
  out.value = -0.5 * r.value;
  out.abs_error_estimate = 0.5 * r.abs_error_estimate;
  out.factors.push_back(r);
  return out;
}

double product_error(double value, const std::vector<IntegrationResult>& factors,
                     std::size_t repeats) {
  double rel = 0.0;
  for (const auto& f : factors) {
    if (f.value != 0.0) rel += f.abs_error_estimate / std::abs(f.value);
  }
  return std::abs(value) * rel * static_cast<double>(repeats);
}

}  // namespace

MeasureResult gwj(const Distribution& d, const WeightFunction& w, const MeasureOptions& opts) {
  return single_factor(d, w, {IntegrandTag::extropy_density, 0}, opts);
}

MeasureResult gw_cumulative(const Distribution& d, const WeightFunction& w, Variant variant,
                            const MeasureOptions& opts) {
  if (variant == Variant::extropy) return gwj(d, w, opts);
  reject_a_priori(d, w, variant);
  const IntegrandKind kind{variant == Variant::past ? IntegrandTag::lambda : IntegrandTag::delta,
                           0};
  try {
    return single_factor(d, w, kind, opts);
  } catch (const DivergenceError& e) {
    throw DivergenceError(std::string(variant_name(variant)) + " measure: " + e.what());
  }
}

MeasureResult gw_design_measure(const Distribution& d, const WeightFunction& w,
                                const MeasureSpec& spec, const MeasureOptions& opts) {
  spec.validate();
  if (spec.design == Design::single) return gw_cumulative(d, w, spec.variant, opts);
  try {
    reject_a_priori(d, w, spec.variant);
  } catch (const DivergenceError& e) {
    throw DivergenceError(std::string(design_name(spec.design)) + " factor i=1: " + e.what());
  }

  if (spec.design == Design::srs) {
    MeasureResult base = [&] {
      try {
        return gw_cumulative(d, w, spec.variant, opts);
      } catch (const DivergenceError& e) {
        throw DivergenceError(std::string("srs factor i=1: ") + e.what());
      }
    }();
    const double factor = base.factors.front().value;
    double product = 1.0;
    for (unsigned i = 0; i < spec.n; ++i) product *= factor;
    MeasureResult out;
    out.value = -0.5 * product;
    out.factors = std::move(base.factors);
    out.abs_error_estimate = product_error(out.value, out.factors, spec.n);
    return out;
  }

  const IntegrandTag tag =
      spec.design == Design::max_rssu ? IntegrandTag::psi : IntegrandTag::phi;
  auto factor = [&](unsigned i) {
    try {
      return integrate_kind(d, w, {tag, i}, opts.quadrature);
    } catch (const DivergenceError& e) {
      std::ostringstream os;
      os << design_name(spec.design) << " factor i=" << i << ": " << e.what();
      throw DivergenceError(os.str());
    }
  };

  MeasureResult out;
  out.factors.resize(spec.n);
  if (opts.parallel && spec.n > 1) {
    std::vector<std::future<IntegrationResult>> jobs;
    jobs.reserve(spec.n);
    for (unsigned i = 1; i <= spec.n; ++i) {
      jobs.push_back(std::async(std::launch::async, factor, i));
    }
    for (unsigned i = 0; i < spec.n; ++i) out.factors[i] = jobs[i].get();
  } else {
    for (unsigned i = 1; i <= spec.n; ++i) out.factors[i - 1] = factor(i);
  }

  double product = 1.0;
  for (const auto& f : out.factors) product *= f.value;
  out.value = -0.5 * product;
  out.abs_error_estimate = product_error(out.value, out.factors, 1);
  return out;
}

std::optional<double> closed_form(const Distribution& d, const WeightFunction& w,
                                  const MeasureSpec& spec) {
  try {
    spec.validate();
  } catch (const Error&) {
    return std::nullopt;
  }
  if (w.family() != WeightFamily::power || spec.variant == Variant::extropy) return std::nullopt;

  const double m = w.parameter();
  const unsigned n = spec.n;
  const bool srs_like = spec.design == Design::single || spec.design == Design::srs;

  switch (d.family()) {
    case Family::uniform: {
      if (d.parameters() != std::vector<double>{0.0, 1.0}) return std::nullopt;
      if (srs_like) {
        const double e = spec.variant == Variant::past
                             ? 1.0 / (m + 3.0)
                             : 1.0 / (m + 1.0) - 2.0 / (m + 2.0) + 1.0 / (m + 3.0);
        return -0.5 * std::pow(e, n);
      }
      if (spec.design == Design::max_rssu) {
        double p = 1.0;
        for (unsigned i = 1; i <= n; ++i) p /= (2.0 * i + m + 1.0);
        return -0.5 * p;
      }
      // minRSSU: Gamma(m+1) enters once per factor, so the exponent is n.
      double p = std::pow(std::tgamma(m + 1.0), n);
      for (unsigned i = 1; i <= n; ++i) {
        p *= std::exp(std::lgamma(2.0 * i + 1.0) - std::lgamma(2.0 * i + m + 2.0));
      }
      return -0.5 * p;
    }
    case Family::exponential: {
      if (spec.design != Design::min_rssu) return std::nullopt;
      const double lambda = d.parameters().front();
      double nfact = 1.0;
      for (unsigned i = 2; i <= n; ++i) nfact *= i;
      return -0.5 * std::pow(std::tgamma(m + 1.0) / std::pow(2.0 * lambda, m + 1.0), n) *
             std::pow(1.0 / nfact, m + 1.0);
    }
    case Family::power_survival: {
      if (spec.design != Design::min_rssu) return std::nullopt;
      const double b = d.parameters().front();
      double p = 1.0;
      for (unsigned i = 1; i <= n; ++i) p *= beta_fn(m + 1.0, 2.0 * i * b + 1.0);
      return -0.5 * p;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace gwcx
