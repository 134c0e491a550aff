#include "asymptotica/mollifier/mollifier.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>

#include "json.hpp"

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/linprog.hpp"
#include "asymptotica/numerics/quadrature.hpp"

namespace asymptotica::mollifier {

namespace {

std::vector<double> symmetricGrid(int points, double radius) {
  const int half = (points - 1) / 2;
  std::vector<double> x(points);
  for (int i = 0; i < points; ++i) x[i] = radius * double(i - half) / half;
  x[half] = 0.0;
  return x;
}

/// Integral of x^p against the unit hat centred at c with half-width h.
double hatMoment(int p, double c, double h) {
  const auto& rule = numerics::gaussLegendre(p / 2 + 2);
  auto side = [&](double a, double b, bool rising) {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double s = 0.0;
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + half * rule.nodes(q);
      const double hat = rising ? (t - a) / h : (b - t) / h;
      s += rule.weights(q) * std::pow(t, p) * hat;
    }
    return half * s;
  };
  return side(c - h, c, true) + side(c, c + h, false);
}

}  // namespace

MollifierSpec MollifierSpec::forIndex(int n, int gridPoints) {
  MollifierSpec s;
  s.n = n;
  s.supportRadius = n >= 1 ? 1.0 / n : 1.0;
  s.gridPoints = gridPoints;
  return s;
}

void MollifierSpec::validate() const {
  if (n < 0) throw ConfigError("basic-set index must be >= 0");
  if (!(supportRadius > 0)) throw ConfigError("support radius must be positive");
  if (gridPoints % 2 == 0) throw ConfigError("gridPoints must be odd");
  if (gridPoints < 2 * n + 3)
    throw ConfigError("gridPoints must be at least 2n+3 (got " + std::to_string(gridPoints) + ")");
  if (!(momentTolerance > 0)) throw ConfigError("momentTolerance must be positive");
}

Mollifier Mollifier::fromValues(const MollifierSpec& spec, std::vector<double> values) {
  Mollifier m;
  m.spec = spec;
  m.phi = GridFunction(symmetricGrid(spec.gridPoints, spec.supportRadius), std::move(values));
  m.achievedMoments.resize(spec.n + 1);
  for (int k = 0; k <= spec.n; ++k) m.achievedMoments[k] = moment(m, k);
  m.achievedL1 = m.phi.l1();
  const auto& y = m.phi.y();
  const double h = spec.supportRadius / ((spec.gridPoints - 1) / 2);
  m.lpObjective = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    m.lpObjective += h * std::abs(y[i]) * ((i == 0 || i + 1 == y.size()) ? 0.5 : 1.0);
  return m;
}

Mollifier buildMollifier(const MollifierSpec& spec) {
  spec.validate();
  const int H = (spec.gridPoints - 1) / 2;
  const int rows = 1 + spec.n / 2;
  const double h = 1.0 / H;

  // Unknowns z_i = w_i v_i on the unit half grid (w the trapezoid weight, so z has unit cost),
  // each split into positive and negative parts. Row j is the x^(2j) moment.
  numerics::StandardFormLP lp;
  lp.A = Eigen::MatrixXd::Zero(rows, 2 * H);
  lp.b = Eigen::VectorXd::Zero(rows);
  lp.c = Eigen::VectorXd::Ones(2 * H);
  lp.b(0) = 1.0;
  std::vector<double> weight(H);
  for (int i = 0; i < H; ++i) {
    weight[i] = i == 0 ? h : 2 * h;
    for (int j = 0; j < rows; ++j) {
      const double a =
          j == 0 ? weight[i] : (i == 0 ? hatMoment(2 * j, 0.0, h) : 2.0 * hatMoment(2 * j, i * h, h));
      lp.A(j, 2 * i) = a / weight[i];
      lp.A(j, 2 * i + 1) = -a / weight[i];
    }
  }

  const numerics::LPSolution sol = numerics::solveLP(lp);

  std::vector<double> values(spec.gridPoints, 0.0);
  for (int i = 0; i < H; ++i) {
    const double v = (sol.x(2 * i) - sol.x(2 * i + 1)) / (weight[i] * spec.supportRadius);
    values[H + i] = v;
    values[H - i] = v;
  }
  return Mollifier::fromValues(spec, std::move(values));
}

double moment(const Mollifier& phi, int k) {
  if (k % 2 == 1) return 0.0;
  return phi.phi.moment(k);
}

MembershipReport verifyBasicSetMembership(const Mollifier& phi, int n, double massTolerance) {
  MembershipReport r;
  r.n = n;
  const auto& x = phi.phi.x();
  const auto& y = phi.phi.y();
  r.symmetric = true;
  for (std::size_t i = 0, j = x.size() - 1; i < j; ++i, --j)
    if (x[i] != -x[j] || y[i] != y[j] || !std::isfinite(y[i])) r.symmetric = false;

  // The interpolant is nonzero on the cells next to each nonzero sample.
  double radius = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] != 0.0) {
      const double lo = x[i > 0 ? i - 1 : i], hi = x[i + 1 < x.size() ? i + 1 : i];
      radius = std::max({radius, std::abs(lo), std::abs(hi)});
    }
  r.supportRadius = radius;
  const double limit = n >= 1 ? 1.0 / n : std::numeric_limits<double>::infinity();
  r.supported = radius <= limit * (1 + 1e-12);

  r.mass = phi.phi.moment(0);
  r.unitMass = std::abs(r.mass - 1.0) <= massTolerance;

  r.maxMomentResidual = 0.0;
  for (int k = 1; k <= n; ++k) r.maxMomentResidual = std::max(r.maxMomentResidual, std::abs(moment(phi, k)));
  r.momentsVanish = r.maxMomentResidual <= phi.spec.momentTolerance;

  r.l1 = phi.phi.l1();
  const double upper = n >= 1 ? 1.0 + 1.0 / n : std::numeric_limits<double>::infinity();
  r.l1Window = r.l1 >= 1.0 - 1e-12 && r.l1 < upper;
  return r;
}

GridFunction scaleToDelta(const Mollifier& phi, double eps) { return phi.phi.scaled(eps, 1.0 / eps); }

void writeMollifier(const Mollifier& phi, const std::string& base) {
  std::ofstream csv(base + ".csv");
  if (!csv) throw ConfigError("cannot write " + base + ".csv");
  csv << "x,phi\n" << std::setprecision(17);
  for (std::size_t i = 0; i < phi.phi.size(); ++i) csv << phi.phi.x()[i] << ',' << phi.phi.y()[i] << '\n';

  nlohmann::json j;
  j["n"] = phi.spec.n;
  j["supportRadius"] = phi.spec.supportRadius;
  j["gridPoints"] = phi.spec.gridPoints;
  j["achievedMoments"] = phi.achievedMoments;
  j["achievedL1"] = phi.achievedL1;
  std::ofstream js(base + ".json");
  if (!js) throw ConfigError("cannot write " + base + ".json");
  js << j.dump(2) << '\n';
}

}  // namespace asymptotica::mollifier
