#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "asymptotica/distribution/test_function.hpp"
#include "asymptotica/mollifier/grid_function.hpp"
#include "asymptotica/numerics/quadrature.hpp"

namespace asymptotica::distribution {

class Distribution;
using DistributionPtr = std::shared_ptr<const Distribution>;

struct DiracDelta {
  double center = 0.0;
};
/// H(x - offset). Sampled as 0 at the jump.
struct Heaviside {
  double offset = 0.0;
};
struct Polynomial {
  std::vector<double> coefficients;  // low-first
};
struct SampledLocallyIntegrable {
  mollifier::GridFunction samples;
};
struct DerivativeOf {
  DistributionPtr base;
  int order = 1;
};
struct Combination {
  std::vector<std::pair<double, DistributionPtr>> terms;
};

class Distribution {
 public:
  using Form = std::variant<DiracDelta, Heaviside, Polynomial, SampledLocallyIntegrable, DerivativeOf, Combination>;

  static Distribution delta(double center = 0.0) { return Distribution(DiracDelta{center}); }
  static Distribution heaviside(double offset = 0.0) { return Distribution(Heaviside{offset}); }
  static Distribution polynomial(std::vector<double> coefficients);
  static Distribution sampled(mollifier::GridFunction g);
  /// Throws `InvalidElement` for order < 1.
  static Distribution derivative(const Distribution& base, int order = 1);
  /// Throws `InvalidElement` when empty.
  static Distribution combination(std::vector<std::pair<double, Distribution>> terms);

  const Form& form() const { return form_; }

 private:
  explicit Distribution(Form f) : form_(std::move(f)) {}
  Form form_;
};

/// T[tau]. Throws `CoverageError` when a sampled distribution does not cover supp tau.
double pair(const Distribution& T, const TestFunction& tau, const numerics::QuadratureOptions& opts = {});

/// Pointwise value for the function-like variants (Heaviside, polynomial, sampled).
double pointValue(const Distribution& T, double x);

/// (T * phi)(x) = T[phi(x - .)].
double convolveAt(const Distribution& T, const TestFunction& phi, double x);
std::vector<double> convolve(const Distribution& T, const TestFunction& phi, const std::vector<double>& xs);

double evaluatePolynomial(const std::vector<double>& coefficients, double x);

}  // namespace asymptotica::distribution
