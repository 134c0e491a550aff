#pragma once

#include <functional>
#include <string>
#include <vector>

#include "asymptotica/distribution/distribution.hpp"
#include "asymptotica/mollifier/mollifier.hpp"
#include "asymptotica/numerics/order.hpp"

namespace asymptotica::distribution {

std::vector<double> probeGrid(double lo, double hi, int points);

/// Grid size used for the n-th regularizing mollifier when none is given.
int defaultRegularizationGrid(int n);

struct RegularizationOptions {
  int nMin = 1;
  std::function<int(int)> gridPoints = defaultRegularizationGrid;
  std::vector<double> probes = probeGrid(-2.0, 2.0, 41);
  double floor = numerics::kDefaultFloor;
};

struct RegularizationRow {
  int n = 0;
  /// |(T * delta_n)[tau] - T[tau]| per panel member.
  std::vector<double> pairingError;
  /// sup over probes of |delta_n * tau - tau| per panel member.
  std::vector<double> smoothingError;
};

struct RegularizationReport {
  std::vector<std::string> tauIds;
  std::vector<RegularizationRow> rows;
  /// Every column strictly decreases in n, or has reached the floor.
  bool pairingDecreasing = false;
  bool smoothingDecreasing = false;
};

/// delta_n = buildMollifier(n): support 1/n and n vanishing moments.
RegularizationReport regularizationReport(const Distribution& T, int nMax, const std::vector<TestFunction>& panel,
                                          const RegularizationOptions& opts = {});

/// max over probes of |(P * phi)(x) - P(x)|.
double polynomialReproductionCheck(const std::vector<double>& P, const mollifier::Mollifier& phi,
                                   const std::vector<double>& probes = probeGrid(-2.0, 2.0, 41));

struct SmoothFunction {
  std::string name;
  std::function<double(double)> f;
};

/// sin | exp | gaussian | poly:<c0>,<c1>,...   Throws `ConfigError`.
SmoothFunction smoothFunction(const std::string& name);

struct EmbeddingScan {
  std::string function;
  int n = 0;
  numerics::OrderEstimate estimate;
  double contractSlope = 0.0;
  bool inconclusive = false;
  bool pass = false;
};

/// Fits the order of sup_x |(f * phi_eps)(x) - f(x)|. Contract: slope >= n + 1 - 0.2.
/// rSquared < 0.98 or fewer than three samples above the floor flags the scan inconclusive.
EmbeddingScan smoothEmbeddingScan(const SmoothFunction& f, const mollifier::Mollifier& phi,
                                  const std::vector<double>& epsGrid,
                                  const std::vector<double>& probes = probeGrid(-2.0, 2.0, 41),
                                  double floor = numerics::kDefaultFloor);

enum class WeakKind { PairingEqual, PairingRho, PairingInfinitesimal };
const char* label(WeakKind k);

struct WeakEqualityOptions {
  double floor = numerics::kDefaultFloor;
  /// Order budget n* for the rho reading.
  int orderBudget = 5;
  /// Smallest slope that counts as infinitesimal.
  double minSlope = 0.5;
  double minRSquared = 0.98;
};

struct WeakEqualityVerdict {
  WeakKind kind;
  std::vector<std::string> tauIds;
  std::vector<numerics::OrderEstimate> estimates;
  std::vector<bool> perTau;
  bool pass = false;
};

using EpsPairing = std::function<double(double eps, const TestFunction& tau)>;

/// Pairing-equal: |A - B| at the floor everywhere. Pairing-infinitesimal: fitted order
/// >= minSlope for every tau. Pairing-rho: fitted order > n* for every tau. Differences that
/// sit at the floor throughout satisfy all three.
WeakEqualityVerdict weakEqualityCheck(WeakKind kind, const EpsPairing& A, const EpsPairing& B,
                                      const std::vector<double>& epsGrid, const std::vector<TestFunction>& panel,
                                      const WeakEqualityOptions& opts = {});

struct ProductRow {
  std::string label;
  std::vector<std::pair<double, double>> values;  // (eps, integral of H_eps delta_eps tau)
  double limit = 0.0;                             // value at the smallest eps
};

/// integral of (H * psi_eps)(x) chi_eps(x) tau(x) dx, with psi regularizing H and chi
/// standing in for delta.
double regularizedProduct(const mollifier::GridFunction& psi, const mollifier::GridFunction& chi, double eps,
                          const TestFunction& tau);

/// Rows for (phi1, phi1), (phi2, phi2) and the mixed pair (phi1 for H, phi2 for delta).
std::vector<ProductRow> regularizedProductExperiment(const mollifier::GridFunction& phi1,
                                                     const mollifier::GridFunction& phi2,
                                                     const std::vector<double>& epsGrid, const TestFunction& tau);

struct ShockCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool boundaryCase = false;
};

/// For u = 2v H(x - vt): lhs = d/dt of the integral of u over [a, b], rhs = (u^2(a) - u^2(b))/2.
/// Throws `InvalidElement` unless a < b and t > 0.
ShockCheck shockConservationCheck(double v, double a, double b, double t);

/// Double integral of u tau_t + u^2/2 tau_x for u = 2v H(x - vt) and tau(x, t) = tx(x) tt(t).
double shockWeakPairing(double v, const TestFunction& tx, const TestFunction& tt);

}  // namespace asymptotica::distribution
