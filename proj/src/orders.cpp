#include "gwcx/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "gwcx/error.hpp"

namespace gwcx {

const char* order_name(OrderKind k) noexcept {
  switch (k) {
    case OrderKind::disp: return "disp";
    case OrderKind::convex_transform: return "convex_transform";
    case OrderKind::star: return "star";
    case OrderKind::superadditive: return "superadditive";
    case OrderKind::st: return "st";
  }
  return "unknown";
}

namespace {

template <class Fn>
double evaluate(Fn&& fn, const char* what, double at) {
  double v;
  try {
    v = fn();
  } catch (const DomainError& e) {
    std::ostringstream os;
    os << what << " failed at " << at << ": " << e.what();
    throw EvaluationError(os.str());
  }
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << what << " is not finite at " << at;
    throw EvaluationError(os.str());
  }
  return v;
}

std::vector<double> interior_grid(std::size_t n) {
  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k) {
    u[k] = static_cast<double>(k + 1) / static_cast<double>(n + 1);
  }
  return u;
}

}  // namespace

OrderVerdict check_order(OrderKind kind, const Distribution& x, const Distribution& y,
                         std::size_t grid_points) {
  if (grid_points < 10) throw InvalidArgumentError("check_order: grid_points must be >= 10");
  const bool shape = kind == OrderKind::convex_transform || kind == OrderKind::star ||
                     kind == OrderKind::superadditive;
  if (shape && (x.support_lower() != 0.0 || y.support_lower() != 0.0)) {
    throw DomainError(std::string("check_order: ") + order_name(kind) +
                      " requires both supports to start at 0");
  }

  // phi = G^-1 o F is the identity when both sides are the same distribution.
  const bool same = x == y;
  OrderVerdict out;
  out.kind = kind;
  double worst = std::numeric_limits<double>::infinity();
  auto record = [&](double margin) {
    worst = std::min(worst, margin);
    ++out.grid;
  };

  const auto grid = interior_grid(kind == OrderKind::superadditive
                                      ? std::min(grid_points, kSuperadditiveAxisCap)
                                      : grid_points);
  std::vector<double> xs(grid.size());
  std::vector<double> phi(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double u = grid[k];
    xs[k] = evaluate([&] { return x.quantile(u); }, "quantile of X", u);
    phi[k] = same ? xs[k] : evaluate([&] { return y.quantile(u); }, "quantile of Y", u);
  }

  switch (kind) {
    case OrderKind::disp:
      for (double u : grid) {
        const double fx = evaluate([&] { return x.pdf_at_quantile(u); }, "density of X", u);
        const double gy =
            same ? fx : evaluate([&] { return y.pdf_at_quantile(u); }, "density of Y", u);
        record(fx - gy);
      }
      break;
    case OrderKind::st:
      for (std::size_t k = 0; k < grid.size(); ++k) record(phi[k] - xs[k]);
      break;
    case OrderKind::convex_transform: {
      double prev_slope = std::numeric_limits<double>::quiet_NaN();
      for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double dx = xs[k + 1] - xs[k];
        if (!(dx > 0.0)) continue;
        const double slope = (phi[k + 1] - phi[k]) / dx;
        if (!std::isnan(prev_slope)) record(slope - prev_slope);
        prev_slope = slope;
      }
      break;
    }
    case OrderKind::star: {
      double prev_ratio = std::numeric_limits<double>::quiet_NaN();
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(xs[k] > 0.0)) continue;
        const double ratio = phi[k] / xs[k];
        if (!std::isnan(prev_ratio)) record(ratio - prev_ratio);
        prev_ratio = ratio;
      }
      break;
    }
    case OrderKind::superadditive:
      for (std::size_t j = 0; j < grid.size(); ++j) {
        for (std::size_t k = j; k < grid.size(); ++k) {
          const double s = xs[j] + xs[k];
          if (!(s < x.support_upper())) continue;
          const double fs = x.cdf(s);
          if (!(fs > 0.0 && fs < 1.0)) continue;
          const double phis =
              same ? s : evaluate([&] { return y.quantile(fs); }, "quantile of Y", fs);
          record(phis - (phi[j] + phi[k]));
        }
      }
      break;
  }

  out.worst_violation = out.grid == 0 ? 0.0 : worst;
  out.holds_x_le_y = out.worst_violation >= -kOrderSlack;
  return out;
}

}  // namespace gwcx
