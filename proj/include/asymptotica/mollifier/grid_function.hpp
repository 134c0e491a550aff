#pragma once

#include <functional>
#include <vector>

namespace asymptotica::mollifier {

/// A function sampled on a strictly increasing grid, linear between samples and zero outside.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<double> x, std::vector<double> y);

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }
  std::size_t size() const { return x_.size(); }
  double lo() const { return x_.front(); }
  double hi() const { return x_.back(); }

  double operator()(double t) const;
  /// Derivative of the interpolant; right-sided at grid points.
  double slope(double t) const;

  /// Exact integral of t^k times the interpolant.
  double moment(int k) const;
  /// Exact integral of the absolute value, including sign changes inside cells.
  double l1() const;
  /// Exact integral from -infinity to t.
  double cumulative(double t) const;
  /// Integral of the interpolant times f, using `order`-point Gauss per cell.
  double integrateAgainst(const std::function<double(double)>& f, int order = 8) const;

  /// t -> c * g(t / eps): grid scaled by eps and values by c.
  GridFunction scaled(double eps, double c = 1.0) const;
  GridFunction shifted(double s) const;

 private:
  std::size_t cell(double t) const;

  std::vector<double> x_, y_;
  std::vector<double> cumulative_;
};

}  // namespace asymptotica::mollifier
