#include "asymptotica/soliton/profile.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/quadrature.hpp"
#include "json.hpp"

namespace asymptotica::soliton {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Moments of P exp(-x^2) and P^2 exp(-2x^2) as functions of c.
double thetaMomentOf(const std::vector<double>& c, int n) {
  if (n % 2) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * gaussianMoment(2 * static_cast<int>(k + 1) + n, 1.0);
  return s;
}

double squareMomentOf(const std::vector<double>& c, int n) {
  if (n % 2) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t l = 0; l < c.size(); ++l)
      s += c[k] * c[l] * gaussianMoment(2 * static_cast<int>(k + l + 2) + n, 2.0);
  return s;
}

Eigen::VectorXd residualVector(const std::vector<double>& c, int m) {
  const auto r = momentSystemResidual(c, m);
  return Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
}

Eigen::MatrixXd jacobian(const std::vector<double>& c, int m) {
  const int eqs = m / 2 + 1, K = static_cast<int>(c.size());
  const double q0 = squareMomentOf(c, 0);
  Eigen::MatrixXd J(eqs, K);
  for (int j = 0; j < eqs; ++j) {
    const double qj = squareMomentOf(c, 2 * j);
    for (int k = 0; k < K; ++k) {
      const double dM = gaussianMoment(2 * (k + 1) + 2 * j, 1.0);
      double dQj = 0.0, dQ0 = 0.0;
      for (int l = 0; l < K; ++l) {
        dQj += 2.0 * c[l] * gaussianMoment(2 * (k + l + 2) + 2 * j, 2.0);
        dQ0 += 2.0 * c[l] * gaussianMoment(2 * (k + l + 2), 2.0);
      }
      J(j, k) = dM - (dQj * q0 - qj * dQ0) / (q0 * q0);
    }
  }
  return J;
}

double supNorm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

double gaussianMoment(int k, double a) {
  if (k < 0 || a <= 0) throw InvalidElement("gaussianMoment needs k >= 0 and a > 0");
  if (k % 2) return 0.0;
  const int h = k / 2;
  double dfact = 1.0;
  for (int i = 2 * h - 1; i > 1; i -= 2) dfact *= i;
  return dfact / std::pow(2.0 * a, h) * std::sqrt(M_PI / a);
}

SolitonProfile::SolitonProfile(std::vector<double> evenCoefficients, int m)
    : c_(std::move(evenCoefficients)), m_(m) {
  if (c_.empty()) throw InvalidElement("a profile needs at least one coefficient");
}

SolitonProfile SolitonProfile::basic() { return SolitonProfile({2.0 / std::sqrt(M_PI)}, 1); }

double SolitonProfile::polynomial(double x) const {
  const double x2 = x * x;
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = (s + *it) * x2;
  return s;
}

double SolitonProfile::operator()(double x) const { return polynomial(x) * std::exp(-x * x); }

double SolitonProfile::polynomialDerivative(double x) const {
  double dp = 0.0;
  for (std::size_t k = 0; k < c_.size(); ++k) dp += 2.0 * (k + 1) * c_[k] * std::pow(x, 2 * k + 1);
  return dp;
}

double SolitonProfile::derivative(double x) const {
  return (polynomialDerivative(x) - 2.0 * x * polynomial(x)) * std::exp(-x * x);
}

double SolitonProfile::thetaMoment(int n) const {
  if (n < 0) throw InvalidElement("negative moment order");
  while (static_cast<int>(thetaCache_.size()) <= n) thetaCache_.push_back(thetaMomentOf(c_, static_cast<int>(thetaCache_.size())));
  return thetaCache_[n];
}

double SolitonProfile::thetaSquaredMoment(int n) const {
  if (n < 0) throw InvalidElement("negative moment order");
  while (static_cast<int>(squareCache_.size()) <= n) squareCache_.push_back(squareMomentOf(c_, static_cast<int>(squareCache_.size())));
  return squareCache_[n];
}

MomentTable profileMoments(const SolitonProfile& p, int nMax) {
  MomentTable t;
  for (int n = 0; n <= nMax; ++n) {
    t.theta.push_back(p.thetaMoment(n));
    t.thetaSquared.push_back(p.thetaSquaredMoment(n));
  }
  return t;
}

MomentTable quadratureMoments(const std::function<double(double)>& f, int nMax, double lo, double hi) {
  numerics::QuadratureOptions opts;
  opts.relTol = 1e-14;
  opts.absTol = 1e-17;
  MomentTable t;
  std::vector<double> cuts;
  for (int i = 1; i < 16; ++i) cuts.push_back(lo + (hi - lo) * i / 16.0);
  for (int n = 0; n <= nMax; ++n) {
    t.theta.push_back(numerics::integrate([&](double x) { return f(x) * std::pow(x, n); }, lo, hi, cuts, opts));
    t.thetaSquared.push_back(
        numerics::integrate([&](double x) { const double v = f(x); return v * v * std::pow(x, n); }, lo, hi, cuts, opts));
  }
  return t;
}

double momentIdentityDefect(const MomentTable& t, int m) {
  if (t.theta.empty() || m >= static_cast<int>(t.theta.size())) throw InvalidElement("moment table too short");
  const double i2 = t.thetaSquared[0];
  double worst = 0.0;
  for (int n = 0; n <= m; ++n)
    worst = std::max(worst, std::abs(i2 * t.theta[n] - t.thetaSquared[n]) / std::max(1.0, std::abs(t.thetaSquared[n])));
  return worst;
}

MomentTable translateMoments(const MomentTable& t, double k) {
  MomentTable out;
  const int N = static_cast<int>(t.theta.size());
  for (int n = 0; n < N; ++n) {
    double a = 0.0, b = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = binomial(n, i) * std::pow(k, n - i);
      a += w * t.theta[i];
      b += w * t.thetaSquared[i];
    }
    out.theta.push_back(a);
    out.thetaSquared.push_back(b);
  }
  return out;
}

TranslatedProfile translateProfile(std::function<double(double)> f, double k) { return {std::move(f), k}; }

std::vector<double> momentSystemResidual(const std::vector<double>& c, int m) {
  if (m < 0) throw InvalidElement("moment order must be non-negative");
  const double q0 = squareMomentOf(c, 0);
  if (q0 <= 0) throw NumericError("profile has zero square integral");
  std::vector<double> r;
  for (int j = 0; j <= m / 2; ++j) r.push_back(thetaMomentOf(c, 2 * j) - squareMomentOf(c, 2 * j) / q0);
  return r;
}

SolitonProfile solveMomentSystem(int m, int coefficientCount, const SolverOptions& opts) {
  if (m < 0) throw InvalidElement("moment order must be non-negative");
  if (coefficientCount < minimalCoefficientCount(m))
    throw InvalidElement("need at least " + std::to_string(minimalCoefficientCount(m)) + " coefficients for m = " +
                         std::to_string(m));

  std::mt19937 rng(opts.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  double best = INFINITY;
  std::vector<double> bestC;

  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    std::vector<double> c(coefficientCount, 0.0);
    c[0] = 2.0 / std::sqrt(M_PI);
    if (attempt > 0)
      for (int k = 0; k < coefficientCount; ++k) c[k] += noise(rng) * std::pow(0.5, k) * (1.0 + attempt / 4.0);

    for (int it = 0; it < opts.maxIterations; ++it) {
      Eigen::VectorXd F;
      try {
        F = residualVector(c, m);
      } catch (const NumericError&) {
        break;
      }
      const double norm = supNorm(F);
      if (!std::isfinite(norm)) break;
      if (norm < best) {
        best = norm;
        bestC = c;
      }
      if (norm < opts.tolerance) return SolitonProfile(c, m);
      const Eigen::MatrixXd J = jacobian(c, m);
      const Eigen::VectorXd step = J.completeOrthogonalDecomposition().solve(-F);
      // Damped: halve until the residual drops.
      double lambda = 1.0;
      bool accepted = false;
      for (int h = 0; h < 30; ++h, lambda *= 0.5) {
        std::vector<double> trial = c;
        for (int k = 0; k < coefficientCount; ++k) trial[k] += lambda * step[k];
        try {
          const double tn = supNorm(residualVector(trial, m));
          if (std::isfinite(tn) && tn < norm) {
            c = trial;
            accepted = true;
            break;
          }
        } catch (const NumericError&) {
        }
      }
      if (!accepted) break;
    }
  }
  throw NoSolutionFound("moment system for m = " + std::to_string(m) + " with " + std::to_string(coefficientCount) +
                        " coefficients not solved; best residual " + std::to_string(best));
}

AbsoluteMomentReport absoluteMomentReport(const SolitonProfile& p, int nMax, double bound) {
  AbsoluteMomentReport r;
  r.bound = bound;
  r.finite = true;
  const double L = 12.0;
  std::vector<double> cuts;
  for (int i = -23; i <= 23; ++i) cuts.push_back(i * 0.5);
  for (int n = 0; n <= nMax; ++n) {
    const double v = numerics::integrate([&](double x) { return std::abs(p(x) * std::pow(x, n)); }, -L, L, cuts);
    r.absoluteMoments.push_back(v);
    if (!std::isfinite(v) || v > bound) r.finite = false;
  }
  return r;
}

std::string profileJson(const SolitonProfile& p, int nMax) {
  const MomentTable t = profileMoments(p, nMax);
  nlohmann::json j;
  j["m"] = p.m();
  j["evenCoefficients"] = p.evenCoefficients();
  j["moments"] = {{"theta", t.theta}, {"thetaSquared", t.thetaSquared}};
  j["thetaSquaredIntegral"] = p.thetaSquaredIntegral();
  return j.dump(2);
}

SolitonProfile profileFromJson(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return SolitonProfile(j.at("evenCoefficients").get<std::vector<double>>(), j.at("m").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad profile file: ") + e.what());
  }
}

}  // namespace asymptotica::soliton
