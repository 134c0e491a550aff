#pragma once

#include <functional>
#include <string>
#include <vector>

#include "asymptotica/distribution/test_function.hpp"
#include "asymptotica/numerics/order.hpp"
#include "asymptotica/soliton/profile.hpp"

namespace asymptotica::soliton {

using distribution::TestFunction;

/// u(x, t) = u0 + (A/eps) Theta((x - v t)/eps), A = 2 eps (v - u0) / int Theta^2.
struct SolitonWave {
  double u0 = 0.0;
  double v = 0.0;
  double eps = 0.0;
  SolitonProfile profile;
  double A = 0.0;
  bool degenerate = false;

  double operator()(double x, double t) const;
  double y(double x, double t) const { return (x - v * t) / eps; }
};

SolitonWave buildWave(double u0, double v, double eps, const SolitonProfile& profile);

struct ResidualOptions {
  int hermiteNodes = 200;
  /// Doubling-check and two-route agreement tolerance (absolute).
  double agreement = 1e-9;
};

struct ResidualParts {
  double reduced = 0.0;
  double direct = 0.0;
  /// |Q(2N) - Q(N)| for the reduced form.
  double doublingChange = 0.0;
};

/// Both quadrature routes for int [u_t + u u_x] tau dx at time t.
ResidualParts weakResidualParts(const SolitonWave& w, const TestFunction& tau, double t, const ResidualOptions& opts = {});

/// The reduced form, after checking it against the direct integrand. Throws
/// NumericalInconsistency when the routes or the doubling check disagree.
double weakResidual(const SolitonWave& w, const TestFunction& tau, double t, const ResidualOptions& opts = {});

struct WaveTemplate {
  double u0 = 0.0;
  double v = 1.0;
  double t = 0.0;
  SolitonProfile profile;
};

struct ResidualReport {
  std::string tauId;
  numerics::OrderEstimate estimate;
  /// Largest |reduced - direct| over the scan.
  double worstRouteGap = 0.0;
};

struct ResidualScan {
  int m = 0;
  std::vector<double> eps;
  std::vector<ResidualReport> perTau;
  double contractSlope = 0.0;
  bool inconclusive = false;
  bool pass = false;
};

/// Slope of |residual| against eps per panel member; contract slope >= m + 1 - 0.3 with
/// rSquared >= minRSquared for all.
ResidualScan residualScan(const WaveTemplate& w, const std::vector<TestFunction>& panel, const std::vector<double>& eps,
                          const ResidualOptions& opts = {}, double floor = numerics::kDefaultFloor,
                          double minRSquared = 0.98);

/// Panel and eps grid used for the residual scans when none is given.
std::vector<TestFunction> defaultSolitonPanel();
std::vector<double> defaultSolitonEpsGrid();

std::string scanCsv(const ResidualScan& s);
std::string scanJson(const ResidualScan& s);

struct ConservationCheck {
  double lhs = 0.0;
  /// d/dt of the quadrature of u over [a, b], by central differences.
  double lhsNumeric = 0.0;
  double rhs = 0.0;
  bool bothSmall = false;
  bool atShockPoint = false;
};

ConservationCheck conservationCheck(const SolitonWave& w, double a, double b, double t, double tolerance = 1e-12);

/// Smooth initial data with its derivative.
struct InitialData {
  std::function<double(double)> f;
  std::function<double(double)> df;
  /// sup of -f', the rate at which characteristics converge; 0 when they never cross.
  double maxCompression = 0.0;
  std::string name;

  double shockTime() const;

  static InitialData constant(double c);
  static InitialData linear(double slope, double offset = 0.0);
  static InitialData fromTestFunction(const TestFunction& tau, double background = 0.0);
};

/// The classical solution u = f(x - u t) before the shock, by safeguarded Newton.
double characteristicsSolve(const InitialData& data, double x, double t);

struct EquivalenceRow {
  double step = 0.0;
  /// sup over the probes of |u_t + (u^2/2)_x|, |u_t + u u_x|, and the integral-form defect.
  double conservative = 0.0;
  double quasilinear = 0.0;
  double integral = 0.0;
};

struct EquivalenceReport {
  std::vector<EquivalenceRow> rows;
  numerics::OrderEstimate conservativeOrder, quasilinearOrder, integralOrder;
  /// Largest pairwise gap between the three forms at the finest step.
  double agreement = 0.0;
};

EquivalenceReport equivalenceCheck(const InitialData& data, double a, double b, const std::vector<double>& tGrid,
                                   const std::vector<double>& steps = {2e-3, 1e-3, 5e-4}, int probes = 21);

}  // namespace asymptotica::soliton
