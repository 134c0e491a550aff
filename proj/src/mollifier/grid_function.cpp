#include "asymptotica/mollifier/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/quadrature.hpp"

namespace asymptotica::mollifier {

GridFunction::GridFunction(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() < 2 || x_.size() != y_.size())
    throw InvalidElement("grid function needs at least two samples and matching sizes");
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i] < x_[i + 1])) throw InvalidElement("grid must be strictly increasing");
  cumulative_.assign(x_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    cumulative_[i + 1] = cumulative_[i] + 0.5 * (x_[i + 1] - x_[i]) * (y_[i] + y_[i + 1]);
}

std::size_t GridFunction::cell(double t) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, x_.size() - 2);
}

double GridFunction::operator()(double t) const {
  if (!(t >= x_.front() && t <= x_.back())) return 0.0;
  const std::size_t i = cell(t);
  const double u = (t - x_[i]) / (x_[i + 1] - x_[i]);
  return (1.0 - u) * y_[i] + u * y_[i + 1];
}

double GridFunction::slope(double t) const {
  if (!(t >= x_.front() && t < x_.back())) return 0.0;
  const std::size_t i = cell(t);
  return (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
}

double GridFunction::moment(int k) const {
  if (k == 0) return cumulative_.back();
  const auto& rule = numerics::gaussLegendre(k / 2 + 2);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double a = x_[i], b = x_[i + 1], half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double cellSum = 0.0;
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + half * rule.nodes(q);
      const double u = (t - a) / (b - a);
      cellSum += rule.weights(q) * std::pow(t, k) * ((1.0 - u) * y_[i] + u * y_[i + 1]);
    }
    s += half * cellSum;
  }
  return s;
}

double GridFunction::l1() const {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double a = y_[i], b = y_[i + 1], h = x_[i + 1] - x_[i];
    if ((a >= 0 && b >= 0) || (a <= 0 && b <= 0)) {
      s += 0.5 * h * std::abs(a + b);
    } else {
      s += 0.5 * h * (a * a + b * b) / (std::abs(a) + std::abs(b));
    }
  }
  return s;
}

double GridFunction::cumulative(double t) const {
  if (t <= x_.front()) return 0.0;
  if (t >= x_.back()) return cumulative_.back();
  const std::size_t i = cell(t);
  const double d = t - x_[i];
  return cumulative_[i] + 0.5 * d * (y_[i] + (*this)(t));
}

double GridFunction::integrateAgainst(const std::function<double(double)>& f, int order) const {
  return numerics::piecewiseGauss([&](double t) { return (*this)(t) * f(t); }, x_, order);
}

GridFunction GridFunction::scaled(double eps, double c) const {
  std::vector<double> x(x_.size()), y(y_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x[i] = eps * x_[i];
    y[i] = c * y_[i];
  }
  return GridFunction(std::move(x), std::move(y));
}

GridFunction GridFunction::shifted(double s) const {
  std::vector<double> x(x_);
  for (double& v : x) v += s;
  return GridFunction(std::move(x), y_);
}

}  // namespace asymptotica::mollifier
