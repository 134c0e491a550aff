#pragma once

#include <Eigen/Dense>

namespace asymptotica::numerics {

/// minimize c.x subject to A x = b, x >= 0.
struct StandardFormLP {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LPSolution {
  Eigen::VectorXd x;
  double objective = 0.0;
  int iterations = 0;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  double pivotTolerance = 1e-12;
  /// Reduced costs closer than this count as tied.
  double tieTolerance = 1e-12;
  int maxIterations = 100000;
  /// Consecutive degenerate pivots before pricing switches to Bland's rule.
  int stallLimit = 50;
};

/// Two-phase revised simplex. The basis is refactored from the original data at every
/// iteration. Pricing is most-negative reduced cost with lowest-index tie-breaking, so runs
/// are reproducible. Throws `Infeasible` or `NumericError`.
LPSolution solveLP(const StandardFormLP& lp, const SimplexOptions& opts = {});

}  // namespace asymptotica::numerics
