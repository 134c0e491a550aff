#include <cmath>
#include <random>

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/linprog.hpp"
#include "asymptotica/numerics/order.hpp"
#include "asymptotica/numerics/quadrature.hpp"
#include "doctest.h"

using namespace asymptotica;
using namespace asymptotica::numerics;

namespace {

double doubleFactorial(int k) {
  double r = 1.0;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 16, 40}) {
    const auto& rule = gaussLegendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      const double got = applyRule(rule, [p](double x) { return std::pow(x, p); }, -1, 1);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(got == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("Gauss-Hermite reproduces Gaussian moments") {
  for (int n : {10, 50, 200}) {
    const auto& rule = gaussHermite(n);
    for (int k = 0; k <= std::min(n - 1, 12); ++k) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) s += rule.weights(i) * std::pow(rule.nodes(i), 2 * k);
      const double exact = doubleFactorial(2 * k - 1) / std::pow(2.0, k) * std::sqrt(M_PI);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(s == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("adaptive integration") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -10, 10) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  // Kink and jump handled through cuts.
  CHECK(integrate([](double x) { return std::abs(x - 0.3); }, -1, 1, {0.3}) ==
        doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 0.7 * 0.7).epsilon(1e-14));
  CHECK(integrate([](double x) { return x < 0.25 ? 0.0 : 1.0; }, 0, 1, {0.25}) ==
        doctest::Approx(0.75).epsilon(1e-14));
  // Reversed limits.
  CHECK(integrate([](double x) { return x; }, 1, 0) == doctest::Approx(-0.5));
  // A smooth compactly supported bump against its known integral.
  const double bump = integrate([](double x) { return std::abs(x) < 1 ? std::exp(-1 / (1 - x * x)) : 0.0; },
                                -1, 1);
  CHECK(bump == doctest::Approx(0.4439938161680794).epsilon(1e-12));
}

TEST_CASE("simplex on small programs") {
  SUBCASE("known optimum") {
    // min -x - y, x + 2y + s1 = 4, 3x + y + s2 = 6.
    StandardFormLP lp;
    lp.A.resize(2, 4);
    lp.A << 1, 2, 1, 0, 3, 1, 0, 1;
    lp.b = Eigen::Vector2d(4, 6);
    lp.c = Eigen::Vector4d(-1, -1, 0, 0);
    const auto sol = solveLP(lp);
    CHECK(sol.x(0) == doctest::Approx(1.6));
    CHECK(sol.x(1) == doctest::Approx(1.2));
    CHECK(sol.objective == doctest::Approx(-2.8));
  }
  SUBCASE("infeasible") {
    StandardFormLP lp;
    lp.A.resize(2, 2);
    lp.A << 1, 1, 1, 1;
    lp.b = Eigen::Vector2d(1, 2);
    lp.c = Eigen::Vector2d(1, 1);
    CHECK_THROWS_AS(solveLP(lp), Infeasible);
  }
  SUBCASE("unbounded") {
    StandardFormLP lp;
    lp.A.resize(1, 2);
    lp.A << 1, -1;
    lp.b = Eigen::VectorXd::Ones(1);
    lp.c = Eigen::Vector2d(-1, 0);
    CHECK_THROWS_AS(solveLP(lp), NumericError);
  }
  SUBCASE("redundant and negative right-hand side") {
    StandardFormLP lp;
    lp.A.resize(3, 3);
    lp.A << 1, 1, 1, 2, 2, 2, -1, 0, 1;
    lp.b = Eigen::Vector3d(1, 2, 0);
    lp.c = Eigen::Vector3d(3, 1, 2);
    const auto sol = solveLP(lp);
    CHECK(sol.objective == doctest::Approx(1.0));
    CHECK(sol.x(1) == doctest::Approx(1.0));
  }
  SUBCASE("deterministic") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    StandardFormLP lp;
    lp.A = Eigen::MatrixXd::NullaryExpr(3, 30, [&]() { return u(rng); });
    lp.b = lp.A * Eigen::VectorXd::Constant(30, 0.5);
    lp.c = Eigen::VectorXd::NullaryExpr(30, [&]() { return 1.0 + u(rng); });
    const auto a = solveLP(lp), b = solveLP(lp);
    CHECK(a.x == b.x);
    CHECK((lp.A * a.x - lp.b).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fitSlope") {
  const auto exact = fitSlope({{0.1, 1e-3}, {0.01, 1e-6}, {0.001, 1e-9}});
  CHECK_FALSE(exact.inconclusive);
  CHECK(exact.slope == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(exact.rSquared == doctest::Approx(1.0));

  const auto constant = fitSlope({{0.1, 2.0}, {0.01, 2.0}, {0.001, 2.0}});
  CHECK(std::abs(constant.slope) < 1e-14);

  const auto floor = fitSlope({{0.1, 1e-15}, {0.01, 1e-16}, {0.001, 0.0}});
  CHECK(floor.inconclusive);
  CHECK(floor.excludedAtFloor == 3);

  const auto partial = fitSlope({{0.1, 1e-5}, {0.05, 1e-6}, {0.02, 1e-14}, {0.01, 1e-7}});
  CHECK(partial.excludedAtFloor == 1);
  CHECK(partial.usable() == 3);

  for (double p : {0.5, 1.0, 2.0, 3.0, 4.5}) {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i <= 10; ++i) {
      const double eps = std::pow(10.0, -1.0 - 0.2 * i);
      s.emplace_back(eps, 7.0 * std::pow(eps, p));
    }
    const auto est = fitSlope(s, 1e-300);
    CAPTURE(p);
    CHECK(std::abs(est.slope - p) < 1e-10);
    CHECK(decadesSpanned(s) == doctest::Approx(2.0));
  }
}
