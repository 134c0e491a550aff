#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace asymptotica::numerics {

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss–Legendre on [-1, 1]. Cached per n; safe to call concurrently.
const GaussRule& gaussLegendre(int n);

/// Gauss–Hermite for the weight exp(-x^2) on the real line.
const GaussRule& gaussHermite(int n);

/// Sum of w_i f(x_i) over the rule mapped to [a, b].
double applyRule(const GaussRule& rule, const std::function<double(double)>& f, double a, double b);

struct QuadratureOptions {
  double absTol = 1e-15;
  double relTol = 1e-13;
  int maxDepth = 30;
  int order = 16;
};

struct QuadratureResult {
  double value = 0.0;
  double errorEstimate = 0.0;
  bool converged = true;
};

/// Adaptive bisection with a panel-doubling check. `cuts` are points where f may have a
/// kink or jump; the interval is split there first.
QuadratureResult adaptiveIntegrate(const std::function<double(double)>& f, double a, double b,
                                   const std::vector<double>& cuts = {},
                                   const QuadratureOptions& opts = {});

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const std::vector<double>& cuts = {}, const QuadratureOptions& opts = {}) {
  return adaptiveIntegrate(f, a, b, cuts, opts).value;
}

/// Sum over consecutive pieces of `knots`, each with a fixed Gauss–Legendre rule. Exact for
/// piecewise polynomials of degree < 2*order between knots.
double piecewiseGauss(const std::function<double(double)>& f, const std::vector<double>& knots,
                      int order);

}  // namespace asymptotica::numerics
