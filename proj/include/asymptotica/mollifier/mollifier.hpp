#pragma once

#include <string>
#include <vector>

#include "asymptotica/mollifier/grid_function.hpp"

namespace asymptotica::mollifier {

constexpr int kDefaultGridPoints = 401;

struct MollifierSpec {
  int n = 1;
  double supportRadius = 1.0;
  int gridPoints = kDefaultGridPoints;
  double momentTolerance = 1e-8;

  /// Radius 1/n (1 for n = 0).
  static MollifierSpec forIndex(int n, int gridPoints = kDefaultGridPoints);
  /// Throws `ConfigError` unless gridPoints is odd and >= 2n+3 and the radius is positive.
  void validate() const;
};

struct Mollifier {
  MollifierSpec spec;
  GridFunction phi;
  std::vector<double> achievedMoments;
  double achievedL1 = 0.0;
  /// Trapezoid-weighted L1 that the linear program minimized.
  double lpObjective = 0.0;

  /// Wraps given values on the symmetric grid of `spec` and measures them.
  static Mollifier fromValues(const MollifierSpec& spec, std::vector<double> values);
};

/// L1-minimal symmetric grid function with unit mass and vanishing even moments
/// x^2, ..., x^(2 floor(n/2)). The interpolant is pinned to zero at both ends of the grid.
/// Throws `Infeasible` or `NumericError`.
Mollifier buildMollifier(const MollifierSpec& spec);

/// Integral of x^k phi. Odd k gives exactly 0.
double moment(const Mollifier& phi, int k);

struct MembershipReport {
  int n = 0;
  bool symmetric = false;
  bool supported = false;
  bool unitMass = false;
  bool momentsVanish = false;
  bool l1Window = false;
  double mass = 0.0;
  double maxMomentResidual = 0.0;
  double supportRadius = 0.0;
  double l1 = 0.0;

  bool all() const { return symmetric && supported && unitMass && momentsVanish && l1Window; }
};

MembershipReport verifyBasicSetMembership(const Mollifier& phi, int n, double massTolerance = 1e-10);

/// x -> phi(x / eps) / eps on the scaled grid.
GridFunction scaleToDelta(const Mollifier& phi, double eps);

/// Writes `<base>.csv` (x,phi) and `<base>.json`.
void writeMollifier(const Mollifier& phi, const std::string& base);

}  // namespace asymptotica::mollifier
