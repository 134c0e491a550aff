#include "asymptotica/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "asymptotica/errors.hpp"

namespace asymptotica::numerics {

namespace {

/// Golub–Welsch eigenvalues, then Newton polish on the orthonormal three-term recurrence.
/// Weights are the Christoffel numbers 1 / sum_k p_k(x)^2.
GaussRule golubWelsch(int n, double (*alpha)(int), double (*beta)(int), double p0) {
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) diag(k) = alpha(k);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(beta(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);
  GaussRule rule{solver.eigenvalues(), Eigen::VectorXd(n)};

  auto evaluate = [&](double x, double& pn, double& dpn, double& sumSq) {
    double prev = 0.0, cur = p0, dprev = 0.0, dcur = 0.0;
    sumSq = 0.0;
    for (int k = 0; k < n; ++k) {
      sumSq += cur * cur;
      const double b1 = std::sqrt(beta(k + 1));
      const double bk = k > 0 ? std::sqrt(beta(k)) : 0.0;
      const double next = ((x - alpha(k)) * cur - bk * prev) / b1;
      const double dnext = (cur + (x - alpha(k)) * dcur - bk * dprev) / b1;
      prev = cur;
      cur = next;
      dprev = dcur;
      dcur = dnext;
    }
    pn = cur;
    dpn = dcur;
  };

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes(i), pn = 0, dpn = 0, sumSq = 0;
    for (int it = 0; it < 3; ++it) {
      evaluate(x, pn, dpn, sumSq);
      if (dpn == 0.0) break;
      x -= pn / dpn;
    }
    evaluate(x, pn, dpn, sumSq);
    rule.nodes(i) = x;
    rule.weights(i) = 1.0 / sumSq;
  }
  return rule;
}

double zero(int) { return 0.0; }
double legendreBeta(int k) { return k == 0 ? 2.0 : double(k) * k / (4.0 * k * k - 1.0); }
double hermiteBeta(int k) { return k == 0 ? std::sqrt(M_PI) : k / 2.0; }

template <typename Make>
const GaussRule& cached(std::map<int, std::unique_ptr<GaussRule>>& cache, std::mutex& mutex, int n,
                        Make make) {
  if (n < 1) throw NumericError("a Gauss rule needs at least one node");
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(make(n));
  return *slot;
}

void symmetrize(GaussRule& rule) {
  const int n = static_cast<int>(rule.nodes.size());
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (rule.nodes(n - 1 - i) - rule.nodes(i));
    const double w = 0.5 * (rule.weights(n - 1 - i) + rule.weights(i));
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = rule.weights(n - 1 - i) = w;
  }
  if (n % 2 == 1) rule.nodes(n / 2) = 0.0;
}

struct Panel {
  double value;
  double absValue;
};

Panel panel(const GaussRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double s = 0.0, sa = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    const double v = rule.weights(i) * f(mid + half * rule.nodes(i));
    s += v;
    sa += std::abs(v);
  }
  return {s * half, sa * std::abs(half)};
}

void refine(const GaussRule& rule, const std::function<double(double)>& f, double a, double b,
            const Panel& whole, int depth, const QuadratureOptions& opts, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const Panel left = panel(rule, f, a, m), right = panel(rule, f, m, b);
  const double split = left.value + right.value;
  const double diff = std::abs(split - whole.value);
  const double tol = std::max(opts.absTol, opts.relTol * (left.absValue + right.absValue));
  if (diff <= tol || depth >= opts.maxDepth) {
    if (diff > tol) out.converged = false;
    out.value += split;
    out.errorEstimate += diff;
    return;
  }
  refine(rule, f, a, m, left, depth + 1, opts, out);
  refine(rule, f, m, b, right, depth + 1, opts, out);
}

}  // namespace

const GaussRule& gaussLegendre(int n) {
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  static std::mutex mutex;
  return cached(cache, mutex, n, [](int k) {
    GaussRule r = golubWelsch(k, zero, legendreBeta, 1.0 / std::sqrt(2.0));
    symmetrize(r);
    return r;
  });
}

const GaussRule& gaussHermite(int n) {
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  static std::mutex mutex;
  return cached(cache, mutex, n, [](int k) {
    GaussRule r = golubWelsch(k, zero, hermiteBeta, std::pow(M_PI, -0.25));
    symmetrize(r);
    return r;
  });
}

double applyRule(const GaussRule& rule, const std::function<double(double)>& f, double a, double b) {
  return panel(rule, f, a, b).value;
}

QuadratureResult adaptiveIntegrate(const std::function<double(double)>& f, double a, double b,
                                   const std::vector<double>& cuts, const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> pts{a};
  std::vector<double> inner;
  for (double c : cuts)
    if (c > a && c < b) inner.push_back(c);
  std::sort(inner.begin(), inner.end());
  for (double c : inner)
    if (c > pts.back()) pts.push_back(c);
  pts.push_back(b);

  const GaussRule& rule = gaussLegendre(opts.order);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Panel whole = panel(rule, f, pts[i], pts[i + 1]);
    refine(rule, f, pts[i], pts[i + 1], whole, 0, opts, out);
  }
  out.value *= sign;
  return out;
}

double piecewiseGauss(const std::function<double(double)>& f, const std::vector<double>& knots,
                      int order) {
  const GaussRule& rule = gaussLegendre(order);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) s += panel(rule, f, knots[i], knots[i + 1]).value;
  return s;
}

}  // namespace asymptotica::numerics
