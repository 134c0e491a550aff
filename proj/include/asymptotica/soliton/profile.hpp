#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace asymptotica::soliton {

/// Integral of x^k exp(-a x^2) over the real line; zero for odd k.
double gaussianMoment(int k, double a);

/// Theta(x) = (sum_k c_k x^(2k)) exp(-x^2), k = 1..K. Even, Theta(0) = 0, Gaussian decay.
class SolitonProfile {
 public:
  SolitonProfile() = default;
  SolitonProfile(std::vector<double> evenCoefficients, int m);

  /// The lowest normalized profile, (2/sqrt(pi)) x^2 exp(-x^2).
  static SolitonProfile basic();

  const std::vector<double>& evenCoefficients() const { return c_; }
  int m() const { return m_; }

  double operator()(double x) const;
  double derivative(double x) const;
  /// The polynomial factor P with Theta = P exp(-x^2).
  double polynomial(double x) const;
  double polynomialDerivative(double x) const;

  /// Closed-form moments, cached.
  double thetaMoment(int n) const;
  double thetaSquaredMoment(int n) const;
  double thetaSquaredIntegral() const { return thetaSquaredMoment(0); }

 private:
  std::vector<double> c_;
  int m_ = 0;
  mutable std::vector<double> thetaCache_, squareCache_;
};

struct MomentTable {
  /// Index n holds the n-th moment of Theta and of Theta^2.
  std::vector<double> theta;
  std::vector<double> thetaSquared;
};

MomentTable profileMoments(const SolitonProfile& p, int nMax);

/// Moments of Theta and Theta^2 by adaptive quadrature, for cross-checks.
MomentTable quadratureMoments(const std::function<double(double)>& f, int nMax, double lo, double hi);

/// max over n <= m of |I2 * int Theta x^n - int Theta^2 x^n| / max(1, |int Theta^2 x^n|).
double momentIdentityDefect(const MomentTable& t, int m);

/// Moments of f(x - k) from those of f, by binomial expansion.
MomentTable translateMoments(const MomentTable& t, double k);

/// g(x) = f(x - k).
struct TranslatedProfile {
  std::function<double(double)> base;
  double shift = 0.0;
  double operator()(double x) const { return base(x - shift); }
};

TranslatedProfile translateProfile(std::function<double(double)> f, double k);

struct SolverOptions {
  double tolerance = 1e-12;
  int maxIterations = 60;
  int restarts = 24;
  std::uint32_t seed = 20240601;
};

/// F_j(c) = int Theta x^(2j) - int Theta^2 x^(2j) / int Theta^2, j = 0..floor(m/2).
std::vector<double> momentSystemResidual(const std::vector<double>& c, int m);

/// Newton with minimal-norm steps and seeded restarts. Throws NoSolutionFound with the best
/// residual when every start fails.
SolitonProfile solveMomentSystem(int m, int coefficientCount, const SolverOptions& opts = {});

inline int minimalCoefficientCount(int m) { return (m + 1) / 2 + 1; }

struct AbsoluteMomentReport {
  std::vector<double> absoluteMoments;
  double bound = 0.0;
  bool finite = false;
};

/// int |Theta x^n| for n <= nMax, against a configured bound.
AbsoluteMomentReport absoluteMomentReport(const SolitonProfile& p, int nMax, double bound = 1e6);

std::string profileJson(const SolitonProfile& p, int nMax);
SolitonProfile profileFromJson(const std::string& text);

}  // namespace asymptotica::soliton
