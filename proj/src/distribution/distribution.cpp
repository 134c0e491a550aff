#include "asymptotica/distribution/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "asymptotica/errors.hpp"

namespace asymptotica::distribution {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double evaluatePolynomial(const std::vector<double>& coefficients, double x) {
  double s = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) s = s * x + *it;
  return s;
}

Distribution Distribution::polynomial(std::vector<double> coefficients) {
  return Distribution(Polynomial{std::move(coefficients)});
}

Distribution Distribution::sampled(mollifier::GridFunction g) {
  return Distribution(SampledLocallyIntegrable{std::move(g)});
}

Distribution Distribution::derivative(const Distribution& base, int order) {
  if (order < 1) throw InvalidElement("derivative order must be >= 1");
  return Distribution(DerivativeOf{std::make_shared<const Distribution>(base), order});
}

Distribution Distribution::combination(std::vector<std::pair<double, Distribution>> terms) {
  if (terms.empty()) throw InvalidElement("combination needs at least one term");
  Combination c;
  for (auto& [s, d] : terms) c.terms.emplace_back(s, std::make_shared<const Distribution>(std::move(d)));
  return Distribution(std::move(c));
}

double pair(const Distribution& T, const TestFunction& tau, const numerics::QuadratureOptions& opts) {
  const Interval s = tau.support();
  return std::visit(
      Overloaded{
          [&](const DiracDelta& d) { return tau(d.center); },
          [&](const Heaviside& h) {
            const double lo = std::max(h.offset, s.lo);
            if (!(lo < s.hi)) return 0.0;
            return numerics::integrate([&](double x) { return tau(x); }, lo, s.hi, tau.breakpoints(), opts);
          },
          [&](const Polynomial& p) {
            return numerics::integrate(
                [&](double x) { return evaluatePolynomial(p.coefficients, x) * tau(x); }, s.lo, s.hi,
                tau.breakpoints(), opts);
          },
          [&](const SampledLocallyIntegrable& g) {
            const auto& G = g.samples;
            const double tolerance = 1e-12 * std::max(1.0, std::max(std::abs(G.lo()), std::abs(G.hi())));
            if (s.lo < G.lo() - tolerance || s.hi > G.hi() + tolerance)
              throw CoverageError("test function support is not covered by the sampled grid");
            std::vector<double> cuts(G.x());
            const auto b = tau.breakpoints();
            cuts.insert(cuts.end(), b.begin(), b.end());
            return numerics::integrate([&](double x) { return G(x) * tau(x); }, s.lo, s.hi, cuts, opts);
          },
          [&](const DerivativeOf& d) {
            const double sign = d.order % 2 == 0 ? 1.0 : -1.0;
            return sign * pair(*d.base, tau.derivative(d.order), opts);
          },
          [&](const Combination& c) {
            double sum = 0.0;
            for (const auto& [coef, part] : c.terms) sum += coef * pair(*part, tau, opts);
            return sum;
          },
      },
      T.form());
}

double pointValue(const Distribution& T, double x) {
  return std::visit(
      Overloaded{
          [&](const Heaviside& h) { return x > h.offset ? 1.0 : 0.0; },
          [&](const Polynomial& p) { return evaluatePolynomial(p.coefficients, x); },
          [&](const SampledLocallyIntegrable& g) { return g.samples(x); },
          [&](const Combination& c) {
            double sum = 0.0;
            for (const auto& [coef, part] : c.terms) sum += coef * pointValue(*part, x);
            return sum;
          },
          [&](const auto&) -> double { throw InvalidElement("distribution has no pointwise values"); },
      },
      T.form());
}

double convolveAt(const Distribution& T, const TestFunction& phi, double x) {
  return pair(T, phi.reflectedAt(x));
}

std::vector<double> convolve(const Distribution& T, const TestFunction& phi, const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(convolveAt(T, phi, x));
  return out;
}

}  // namespace asymptotica::distribution
