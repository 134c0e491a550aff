#include "asymptotica/soliton/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/quadrature.hpp"
#include "json.hpp"

namespace asymptotica::soliton {

namespace {

double hermite(const numerics::GaussRule& rule, const std::function<double(double)>& g) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * g(rule.nodes[i]);
  return s;
}

/// g with int g(y) exp(-y^2) dy = int (Theta - Theta^2/I2)(y) tau'(vt + eps y) dy.
double reducedIntegral(const SolitonWave& w, const TestFunction& dtau, double t, int nodes) {
  const double i2 = w.profile.thetaSquaredIntegral();
  const double c = w.v * t;
  return hermite(numerics::gaussHermite(nodes), [&](double y) {
    const double P = w.profile.polynomial(y);
    return (P - P * P * std::exp(-y * y) / i2) * dtau(c + w.eps * y);
  });
}

double directIntegral(const SolitonWave& w, const TestFunction& tau, double t, int nodes) {
  const double c = w.v * t, k = w.A / w.eps;
  return hermite(numerics::gaussHermite(nodes), [&](double y) {
    const double P = w.profile.polynomial(y);
    const double dP = w.profile.polynomialDerivative(y) - 2.0 * y * P;
    return k * ((w.u0 - w.v) * dP + k * P * dP * std::exp(-y * y)) * tau(c + w.eps * y);
  });
}

}  // namespace

double SolitonWave::operator()(double x, double t) const {
  if (degenerate) return u0;
  return u0 + (A / eps) * profile(y(x, t));
}

SolitonWave buildWave(double u0, double v, double eps, const SolitonProfile& profile) {
  if (!(eps > 0)) throw InvalidElement("eps must be positive");
  const double i2 = profile.thetaSquaredIntegral();
  if (!(i2 > 0)) throw NumericError("profile has zero square integral");
  SolitonWave w{u0, v, eps, profile, 2.0 * eps * (v - u0) / i2, v == u0};
  return w;
}

ResidualParts weakResidualParts(const SolitonWave& w, const TestFunction& tau, double t, const ResidualOptions& opts) {
  ResidualParts r;
  if (w.degenerate) return r;
  const TestFunction dtau = tau.derivative();
  const double pre = 2.0 * w.eps * (w.v - w.u0) * (w.v - w.u0) / w.profile.thetaSquaredIntegral();
  const double q1 = reducedIntegral(w, dtau, t, opts.hermiteNodes);
  const double q2 = reducedIntegral(w, dtau, t, 2 * opts.hermiteNodes);
  r.reduced = pre * q1;
  r.doublingChange = std::abs(pre * (q2 - q1));
  r.direct = directIntegral(w, tau, t, opts.hermiteNodes);
  return r;
}

double weakResidual(const SolitonWave& w, const TestFunction& tau, double t, const ResidualOptions& opts) {
  const ResidualParts r = weakResidualParts(w, tau, t, opts);
  if (r.doublingChange > opts.agreement)
    throw NumericalInconsistency("residual quadrature not converged under node doubling (change " +
                                 std::to_string(r.doublingChange) + ")");
  if (std::abs(r.reduced - r.direct) > opts.agreement)
    throw NumericalInconsistency("reduced and direct residuals disagree: " + std::to_string(r.reduced) + " vs " +
                                 std::to_string(r.direct));
  return r.reduced;
}

std::vector<TestFunction> defaultSolitonPanel() {
  return {TestFunction::bump({1.0}, 2.0, 0.5, "bump_r2_c0.5"),
          TestFunction::bump({1.0, 0.5}, 2.5, -0.4, "bump_linear_r2.5"),
          TestFunction::bump({2.0, 0.0, -0.5}, 3.0, 0.8, "bump_quadratic_r3"),
          TestFunction::bump({1.0, 0.0, 0.0, 0.4}, 2.2, 0.3, "bump_cubic_r2.2")};
}

std::vector<double> defaultSolitonEpsGrid() {
  std::vector<double> e;
  for (int i = 0; i <= 8; ++i) e.push_back(std::pow(10.0, -1.0 - 0.25 * i));
  return e;
}

ResidualScan residualScan(const WaveTemplate& w, const std::vector<TestFunction>& panel, const std::vector<double>& eps,
                          const ResidualOptions& opts, double floor, double minRSquared) {
  if (eps.size() < 5) throw ConfigError("residual scan needs at least 5 epsilons");
  std::vector<std::pair<double, double>> probe;
  for (double e : eps) probe.emplace_back(e, 1.0);
  if (numerics::decadesSpanned(probe) < 2.0 - 1e-9) throw ConfigError("residual scan eps grid must span at least 2 decades");

  ResidualScan s;
  s.m = w.profile.m();
  s.eps = eps;
  s.contractSlope = s.m + 1 - 0.3;
  s.pass = true;
  for (const auto& tau : panel) {
    ResidualReport r;
    r.tauId = tau.id();
    std::vector<std::pair<double, double>> samples;
    for (double e : eps) {
      const SolitonWave wave = buildWave(w.u0, w.v, e, w.profile);
      const ResidualParts parts = weakResidualParts(wave, tau, w.t, opts);
      if (parts.doublingChange > opts.agreement)
        throw NumericalInconsistency("residual quadrature not converged at eps = " + std::to_string(e));
      r.worstRouteGap = std::max(r.worstRouteGap, std::abs(parts.reduced - parts.direct));
      samples.emplace_back(e, std::abs(parts.reduced));
    }
    if (r.worstRouteGap > opts.agreement)
      throw NumericalInconsistency("reduced and direct residuals disagree for " + tau.id());
    r.estimate = numerics::fitSlope(samples, floor);
    if (r.estimate.inconclusive) s.inconclusive = true;
    if (r.estimate.inconclusive || r.estimate.slope < s.contractSlope || r.estimate.rSquared < minRSquared) s.pass = false;
    s.perTau.push_back(std::move(r));
  }
  return s;
}

std::string scanCsv(const ResidualScan& s) {
  std::ostringstream os;
  os.precision(17);
  os << "epsilon,tau_id,residual\n";
  for (const auto& r : s.perTau)
    for (const auto& [e, v] : r.estimate.samples) os << e << ',' << r.tauId << ',' << v << '\n';
  return os.str();
}

std::string scanJson(const ResidualScan& s) {
  nlohmann::json j;
  j["operation"] = "residualScan";
  j["m"] = s.m;
  j["contractSlope"] = s.contractSlope;
  j["inconclusive"] = s.inconclusive;
  j["verdict"] = s.pass ? "pass" : (s.inconclusive ? "inconclusive" : "fail");
  for (const auto& r : s.perTau) {
    nlohmann::json t;
    t["tau"] = r.tauId;
    t["slope"] = r.estimate.slope;
    t["rSquared"] = r.estimate.rSquared;
    t["excludedAtFloor"] = r.estimate.excludedAtFloor;
    t["worstRouteGap"] = r.worstRouteGap;
    for (const auto& [e, v] : r.estimate.samples) t["table"].push_back({e, v});
    j["perTau"].push_back(t);
  }
  return j.dump(2);
}

ConservationCheck conservationCheck(const SolitonWave& w, double a, double b, double t, double tolerance) {
  if (!(a < b)) throw InvalidElement("conservation check needs a < b");
  ConservationCheck c;
  c.atShockPoint = (a == w.v * t) || (b == w.v * t);
  if (!w.degenerate) c.lhs = (w.A * w.v / w.eps) * (w.profile(w.y(a, t)) - w.profile(w.y(b, t)));
  const double ua = w(a, t), ub = w(b, t);
  c.rhs = 0.5 * (ua * ua - ub * ub);

  const double h = 1e-2 * w.eps;
  auto mass = [&](double s) {
    std::vector<double> cuts;
    for (int k = -40; k <= 40; ++k) {
      const double x = w.v * s + k * 0.25 * w.eps;
      if (x > a && x < b) cuts.push_back(x);
    }
    return numerics::integrate([&](double x) { return w(x, s) - w.u0; }, a, b, cuts);
  };
  c.lhsNumeric = (-mass(t + 2 * h) + 8 * mass(t + h) - 8 * mass(t - h) + mass(t - 2 * h)) / (12 * h);
  c.bothSmall = std::abs(c.lhs) <= tolerance && std::abs(c.rhs) <= tolerance;
  return c;
}

double InitialData::shockTime() const {
  return maxCompression > 0 ? 1.0 / maxCompression : std::numeric_limits<double>::infinity();
}

InitialData InitialData::constant(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, 0.0, "constant"};
}

InitialData InitialData::linear(double slope, double offset) {
  return {[=](double x) { return slope * x + offset; }, [slope](double) { return slope; }, std::max(0.0, -slope),
          "linear"};
}

InitialData InitialData::fromTestFunction(const TestFunction& tau, double background) {
  const TestFunction d = tau.derivative();
  const auto s = tau.support();
  double worst = 0.0;
  const int N = 20000;
  for (int i = 0; i <= N; ++i) worst = std::max(worst, -d(s.lo + (s.hi - s.lo) * i / N));
  return {[tau, background](double x) { return background + tau(x); }, [d](double x) { return d(x); },
          worst * 1.001, tau.id()};
}

double characteristicsSolve(const InitialData& data, double x, double t) {
  if (t < 0) throw InvalidElement("characteristics are traced forward in time only");
  if (t >= data.shockTime())
    throw NoClassicalSolution("t = " + std::to_string(t) + " is past the shock time " + std::to_string(data.shockTime()));
  auto g = [&](double u) { return u - data.f(x - u * t); };
  auto dg = [&](double u) { return 1.0 + t * data.df(x - u * t); };

  double u = data.f(x);
  if (t == 0) return u;
  // g is increasing; bracket the root.
  double lo = u, hi = u, step = 1.0 + std::abs(u);
  while (g(lo) > 0) lo -= (step *= 2);
  step = 1.0 + std::abs(u);
  while (g(hi) < 0) hi += (step *= 2);
  for (int it = 0; it < 200; ++it) {
    const double gu = g(u);
    if (gu == 0) return u;
    if (gu < 0) lo = u; else hi = u;
    double next = u - gu / dg(u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 1e-16 * (1.0 + std::abs(u)) || hi - lo <= 4e-16 * (1.0 + std::abs(u))) return next;
    u = next;
  }
  return u;
}

EquivalenceReport equivalenceCheck(const InitialData& data, double a, double b, const std::vector<double>& tGrid,
                                   const std::vector<double>& steps, int probes) {
  if (!(a < b)) throw InvalidElement("equivalence check needs a < b");
  if (tGrid.empty() || steps.empty()) throw InvalidElement("equivalence check needs times and steps");
  EquivalenceReport rep;
  numerics::QuadratureOptions qo;
  qo.relTol = 1e-14;
  qo.absTol = 1e-16;
  auto u = [&](double x, double t) { return characteristicsSolve(data, x, t); };

  for (double h : steps) {
    EquivalenceRow row{h, 0.0, 0.0, 0.0};
    for (double t : tGrid) {
      if (t - h < 0) throw InvalidElement("time grid too close to 0 for step " + std::to_string(h));
      for (int i = 0; i < probes; ++i) {
        const double x = a + (b - a) * i / (probes - 1);
        const double ut = (u(x, t + h) - u(x, t - h)) / (2 * h);
        const double up = u(x + h, t), um = u(x - h, t), u0 = u(x, t);
        row.conservative = std::max(row.conservative, std::abs(ut + (up * up - um * um) / (4 * h)));
        row.quasilinear = std::max(row.quasilinear, std::abs(ut + u0 * (up - um) / (2 * h)));
      }
      auto mass = [&](double s) { return numerics::integrate([&](double x) { return u(x, s); }, a, b, {}, qo); };
      const double dmass = (mass(t + h) - mass(t - h)) / (2 * h);
      const double ua = u(a, t), ub = u(b, t);
      row.integral = std::max(row.integral, std::abs(dmass - 0.5 * (ua * ua - ub * ub)));
    }
    rep.rows.push_back(row);
  }
  std::vector<std::pair<double, double>> c, q, in;
  for (const auto& r : rep.rows) {
    c.emplace_back(r.step, r.conservative);
    q.emplace_back(r.step, r.quasilinear);
    in.emplace_back(r.step, r.integral);
  }
  rep.conservativeOrder = numerics::fitSlope(c);
  rep.quasilinearOrder = numerics::fitSlope(q);
  rep.integralOrder = numerics::fitSlope(in);
  const auto& f = rep.rows.back();
  rep.agreement = std::max({std::abs(f.conservative - f.quasilinear), std::abs(f.conservative - f.integral),
                            std::abs(f.quasilinear - f.integral)});
  return rep;
}

}  // namespace asymptotica::soliton
