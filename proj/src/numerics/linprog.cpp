#include "asymptotica/numerics/linprog.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "asymptotica/errors.hpp"

namespace asymptotica::numerics {

namespace {

struct Revised {
  Eigen::MatrixXd A;  // rows with b >= 0, followed by one artificial column per row
  Eigen::VectorXd b;
  std::vector<Eigen::Index> basis;
  Eigen::Index original;
  const SimplexOptions& opts;
  int iterations = 0;

  Revised(const StandardFormLP& lp, const SimplexOptions& o) : original(lp.A.cols()), opts(o) {
    const Eigen::Index m = lp.A.rows();
    A = Eigen::MatrixXd::Zero(m, original + m);
    b = lp.b;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double s = lp.b(i) < 0 ? -1.0 : 1.0;
      A.row(i).head(original) = s * lp.A.row(i);
      A(i, original + i) = 1.0;
      b(i) *= s;
      basis.push_back(original + i);
    }
  }

  Eigen::MatrixXd basisMatrix() const {
    Eigen::MatrixXd B(A.rows(), A.rows());
    for (Eigen::Index j = 0; j < A.rows(); ++j) B.col(j) = A.col(basis[j]);
    return B;
  }

  Eigen::VectorXd basicValues() const { return basisMatrix().fullPivLu().solve(b); }

  /// Runs to optimality over columns [0, allowed).
  void optimize(const Eigen::VectorXd& cost, Eigen::Index allowed) {
    int stalled = 0;
    for (;; ++iterations) {
      if (iterations >= opts.maxIterations)
        throw NumericError("simplex did not converge within iteration limit");
      const Eigen::MatrixXd B = basisMatrix();
      const Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
      if (!lu.isInvertible()) throw NumericError("simplex basis became singular");
      const Eigen::VectorXd xB = lu.solve(b);
      Eigen::VectorXd cB(A.rows());
      for (Eigen::Index i = 0; i < A.rows(); ++i) cB(i) = cost(basis[i]);
      const Eigen::VectorXd y = B.transpose().fullPivLu().solve(cB);

      std::vector<bool> inBasis(A.cols(), false);
      for (auto j : basis) inBasis[j] = true;
      const bool bland = stalled >= opts.stallLimit;
      Eigen::Index enter = -1;
      double best = -opts.tolerance;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (inBasis[j]) continue;
        const double d = cost(j) - y.dot(A.col(j));
        if (d < best - opts.tieTolerance) {
          enter = j;
          best = d;
          if (bland) break;
        }
      }
      if (enter < 0) return;

      const Eigen::VectorXd u = lu.solve(A.col(enter));
      const double threshold = opts.pivotTolerance * std::max(1.0, u.cwiseAbs().maxCoeff());
      Eigen::Index leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < A.rows(); ++i) {
        if (u(i) <= threshold) continue;
        const double r = std::max(0.0, xB(i)) / u(i);
        if (leave < 0 || r < ratio || (r == ratio && basis[i] < basis[leave])) {
          ratio = r;
          leave = i;
        }
      }
      if (leave < 0) throw NumericError("linear program is unbounded");
      stalled = ratio == 0.0 ? stalled + 1 : 0;
      basis[leave] = enter;
    }
  }

  /// Swaps zero-level artificials for original columns; drops rows where that is impossible.
  void expelArtificials() {
    for (Eigen::Index i = 0; i < A.rows();) {
      if (basis[i] < original) {
        ++i;
        continue;
      }
      const Eigen::FullPivLU<Eigen::MatrixXd> lu(basisMatrix());
      Eigen::Index pick = -1;
      double best = 1e-9;
      for (Eigen::Index j = 0; j < original; ++j) {
        bool used = false;
        for (auto k : basis) used = used || k == j;
        if (used) continue;
        const double v = std::abs(lu.solve(A.col(j))(i));
        if (v > best) {
          best = v;
          pick = j;
        }
      }
      if (pick >= 0) {
        basis[i] = pick;
        ++i;
        continue;
      }
      // Redundant row: remove it together with its artificial column.
      const Eigen::Index art = basis[i];
      const Eigen::Index m = A.rows();
      Eigen::MatrixXd reduced(m - 1, A.cols() - 1);
      Eigen::VectorXd rb(m - 1);
      for (Eigen::Index r = 0, rr = 0; r < m; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < A.cols(); ++c)
          if (c != art) reduced(rr, cc++) = A(r, c);
        rb(rr++) = b(r);
      }
      A = reduced;
      b = rb;
      basis.erase(basis.begin() + i);
      for (auto& k : basis)
        if (k > art) --k;
    }
  }
};

}  // namespace

LPSolution solveLP(const StandardFormLP& lp, const SimplexOptions& opts) {
  const Eigen::Index m = lp.A.rows(), n = lp.A.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw NumericError("linear program has inconsistent sizes");

  Revised rs(lp, opts);
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  rs.optimize(phase1, n + m);
  const Eigen::VectorXd x1 = rs.basicValues();
  double infeasibility = 0.0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (rs.basis[i] >= n) infeasibility += std::abs(x1(i));
  if (infeasibility > 1e-9 * std::max(1.0, lp.b.cwiseAbs().maxCoeff()))
    throw Infeasible("linear program is infeasible");

  rs.expelArtificials();
  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(rs.A.cols());
  phase2.head(n) = lp.c;
  rs.optimize(phase2, n);

  const Eigen::VectorXd xB = rs.basicValues();
  if (!xB.allFinite()) throw NumericError("optimal basis is singular");
  LPSolution sol;
  sol.x = Eigen::VectorXd::Zero(n);
  for (std::size_t j = 0; j < rs.basis.size(); ++j) sol.x(rs.basis[j]) = std::max(0.0, xB(j));
  sol.objective = lp.c.dot(sol.x);
  sol.iterations = rs.iterations;
  return sol;
}

}  // namespace asymptotica::numerics
