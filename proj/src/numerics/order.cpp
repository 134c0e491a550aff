#include "asymptotica/numerics/order.hpp"

#include <algorithm>
#include <cmath>

namespace asymptotica::numerics {

OrderEstimate fitSlope(const std::vector<std::pair<double, double>>& samples, double floor) {
  OrderEstimate est;
  est.samples = samples;
  std::vector<double> xs, ys;
  for (const auto& [eps, value] : samples) {
    if (!(std::abs(value) > floor) || !(eps > 0) || !std::isfinite(value)) {
      ++est.excludedAtFloor;
      continue;
    }
    xs.push_back(std::log10(eps));
    ys.push_back(std::log10(std::abs(value)));
  }
  const auto n = static_cast<double>(xs.size());
  if (xs.size() < 3) {
    est.inconclusive = true;
    return est;
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    est.inconclusive = true;
    return est;
  }
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (est.intercept + est.slope * xs[i]);
    sse += r * r;
  }
  est.rSquared = syy > 0 ? 1.0 - sse / syy : 1.0;
  return est;
}

double decadesSpanned(const std::vector<std::pair<double, double>>& samples) {
  if (samples.empty()) return 0.0;
  double lo = samples.front().first, hi = lo;
  for (const auto& s : samples) {
    lo = std::min(lo, s.first);
    hi = std::max(hi, s.first);
  }
  return lo > 0 ? std::log10(hi / lo) : 0.0;
}

}  // namespace asymptotica::numerics
