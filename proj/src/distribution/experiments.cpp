#include "asymptotica/distribution/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/quadrature.hpp"

namespace asymptotica::distribution {

namespace {

bool decreasingOrAtFloor(const std::vector<RegularizationRow>& rows, std::size_t tau, bool pairing, double floor) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double prev = pairing ? rows[i - 1].pairingError[tau] : rows[i - 1].smoothingError[tau];
    const double cur = pairing ? rows[i].pairingError[tau] : rows[i].smoothingError[tau];
    if (!(cur < prev || cur <= floor)) return false;
  }
  return true;
}

std::vector<double> mergedKnots(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> k(a);
  k.insert(k.end(), b.begin(), b.end());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

}  // namespace

std::vector<double> probeGrid(double lo, double hi, int points) {
  if (points < 2) return {0.5 * (lo + hi)};
  std::vector<double> x(points);
  for (int i = 0; i < points; ++i) x[i] = lo + (hi - lo) * i / (points - 1);
  return x;
}

int defaultRegularizationGrid(int n) { return 2 * n + 3; }

RegularizationReport regularizationReport(const Distribution& T, int nMax, const std::vector<TestFunction>& panel,
                                          const RegularizationOptions& opts) {
  RegularizationReport report;
  for (const auto& tau : panel) report.tauIds.push_back(tau.id());
  for (int n = std::max(1, opts.nMin); n <= nMax; ++n) {
    const auto delta = mollifier::buildMollifier(mollifier::MollifierSpec::forIndex(n, opts.gridPoints(n)));
    RegularizationRow row;
    row.n = n;
    for (const auto& tau : panel) {
      const TestFunction smooth = TestFunction::smoothed(delta.phi, tau);
      const TestFunction diff = TestFunction::linear({{1.0, smooth}, {-1.0, tau}});
      row.pairingError.push_back(std::abs(pair(T, diff)));
      double sup = 0.0;
      for (double x : opts.probes) sup = std::max(sup, std::abs(diff(x)));
      row.smoothingError.push_back(sup);
    }
    report.rows.push_back(std::move(row));
  }
  report.pairingDecreasing = report.smoothingDecreasing = true;
  for (std::size_t j = 0; j < panel.size(); ++j) {
    report.pairingDecreasing = report.pairingDecreasing && decreasingOrAtFloor(report.rows, j, true, opts.floor);
    report.smoothingDecreasing =
        report.smoothingDecreasing && decreasingOrAtFloor(report.rows, j, false, opts.floor);
  }
  return report;
}

double polynomialReproductionCheck(const std::vector<double>& P, const mollifier::Mollifier& phi,
                                   const std::vector<double>& probes) {
  const Distribution poly = Distribution::polynomial(P);
  const TestFunction phiFn = TestFunction::sampled(phi.phi, "phi");
  double worst = 0.0;
  for (double x : probes) worst = std::max(worst, std::abs(convolveAt(poly, phiFn, x) - evaluatePolynomial(P, x)));
  return worst;
}

SmoothFunction smoothFunction(const std::string& name) {
  if (name == "sin") return {name, [](double x) { return std::sin(x); }};
  if (name == "exp") return {name, [](double x) { return std::exp(x); }};
  if (name == "gaussian") return {name, [](double x) { return std::exp(-x * x); }};
  if (name.rfind("poly:", 0) == 0) {
    std::vector<double> c;
    std::stringstream ss(name.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        c.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ConfigError("bad polynomial coefficient '" + item + "'");
      }
    }
    return {name, [c](double x) { return evaluatePolynomial(c, x); }};
  }
  throw ConfigError("unknown smooth function '" + name + "' (expected sin|exp|gaussian|poly:...)");
}

EmbeddingScan smoothEmbeddingScan(const SmoothFunction& f, const mollifier::Mollifier& phi,
                                  const std::vector<double>& epsGrid, const std::vector<double>& probes,
                                  double floor) {
  EmbeddingScan scan;
  scan.function = f.name;
  scan.n = phi.spec.n;
  scan.contractSlope = phi.spec.n + 1 - 0.2;
  std::vector<std::pair<double, double>> samples;
  for (double eps : epsGrid) {
    const mollifier::GridFunction d = mollifier::scaleToDelta(phi, eps);
    double sup = 0.0;
    for (double x : probes) {
      const double conv = d.integrateAgainst([&](double t) { return f.f(x - t); }, 8);
      sup = std::max(sup, std::abs(conv - f.f(x)));
    }
    samples.emplace_back(eps, sup);
  }
  scan.estimate = numerics::fitSlope(samples, floor);
  scan.inconclusive = scan.estimate.inconclusive || scan.estimate.rSquared < 0.98;
  scan.pass = !scan.inconclusive && scan.estimate.slope >= scan.contractSlope;
  return scan;
}

const char* label(WeakKind k) {
  switch (k) {
    case WeakKind::PairingEqual: return "pairing-equal";
    case WeakKind::PairingRho: return "pairing-rho";
    case WeakKind::PairingInfinitesimal: return "pairing-infinitesimal";
  }
  return "?";
}

WeakEqualityVerdict weakEqualityCheck(WeakKind kind, const EpsPairing& A, const EpsPairing& B,
                                      const std::vector<double>& epsGrid, const std::vector<TestFunction>& panel,
                                      const WeakEqualityOptions& opts) {
  WeakEqualityVerdict v;
  v.kind = kind;
  v.pass = true;
  for (const auto& tau : panel) {
    std::vector<std::pair<double, double>> samples;
    bool atFloor = true;
    for (double eps : epsGrid) {
      const double d = std::abs(A(eps, tau) - B(eps, tau));
      samples.emplace_back(eps, d);
      atFloor = atFloor && d <= opts.floor;
    }
    const auto est = numerics::fitSlope(samples, opts.floor);
    // Fewer than three samples above the floor, ending at the floor: the difference vanishes
    // faster than the grid can resolve.
    const bool vanishes = est.inconclusive && !samples.empty() && samples.back().second <= opts.floor;
    const bool fitted = !est.inconclusive && est.rSquared >= opts.minRSquared;
    bool ok = false;
    switch (kind) {
      case WeakKind::PairingEqual: ok = atFloor; break;
      case WeakKind::PairingInfinitesimal:
        ok = atFloor || vanishes || (fitted && est.slope >= opts.minSlope);
        break;
      case WeakKind::PairingRho: ok = atFloor || vanishes || (fitted && est.slope > opts.orderBudget); break;
    }
    v.tauIds.push_back(tau.id());
    v.estimates.push_back(est);
    v.perTau.push_back(ok);
    v.pass = v.pass && ok;
  }
  return v;
}

double regularizedProduct(const mollifier::GridFunction& psi, const mollifier::GridFunction& chi, double eps,
                          const TestFunction& tau) {
  const mollifier::GridFunction psiEps = psi.scaled(eps, 1.0 / eps);
  const mollifier::GridFunction chiEps = chi.scaled(eps, 1.0 / eps);
  // (H * psi_eps)(x) is the running integral of psi_eps up to x.
  const auto knots = mergedKnots(psiEps.x(), chiEps.x());
  std::vector<double> inside;
  for (double k : knots)
    if (k >= chiEps.lo() && k <= chiEps.hi()) inside.push_back(k);
  return numerics::piecewiseGauss(
      [&](double x) { return psiEps.cumulative(x) * chiEps(x) * tau(x); }, inside, 8);
}

std::vector<ProductRow> regularizedProductExperiment(const mollifier::GridFunction& phi1,
                                                     const mollifier::GridFunction& phi2,
                                                     const std::vector<double>& epsGrid, const TestFunction& tau) {
  std::vector<ProductRow> rows;
  const std::vector<std::tuple<std::string, const mollifier::GridFunction*, const mollifier::GridFunction*>> cases{
      {"phi1,phi1", &phi1, &phi1}, {"phi2,phi2", &phi2, &phi2}, {"phi1,phi2", &phi1, &phi2}};
  for (const auto& [name, psi, chi] : cases) {
    ProductRow row;
    row.label = name;
    double smallest = std::numeric_limits<double>::infinity();
    for (double eps : epsGrid) {
      const double value = regularizedProduct(*psi, *chi, eps, tau);
      row.values.emplace_back(eps, value);
      if (eps < smallest) {
        smallest = eps;
        row.limit = value;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ShockCheck shockConservationCheck(double v, double a, double b, double t) {
  if (!(a < b)) throw InvalidElement("shock check needs a < b");
  if (!(t > 0)) throw InvalidElement("shock check needs t > 0");
  auto H = [](double x) { return x > 0 ? 1.0 : 0.0; };
  const double front = v * t;
  ShockCheck c;
  c.boundaryCase = front == a || front == b;
  // The integral is 2v (b - clamp(vt, a, b)); its t-derivative is -2v^2 while a < vt < b.
  c.lhs = -2.0 * v * v * (H(front - a) - H(front - b));
  c.rhs = 2.0 * v * v * (H(a - front) - H(b - front));
  c.residual = c.lhs - c.rhs;
  return c;
}

double shockWeakPairing(double v, const TestFunction& tx, const TestFunction& tt) {
  const TestFunction dtx = tx.derivative(), dtt = tt.derivative();
  const Interval st = tt.support();
  return numerics::integrate(
      [&](double t) {
        const Distribution H = Distribution::heaviside(v * t);
        return 2.0 * v * dtt(t) * pair(H, tx) + 2.0 * v * v * tt(t) * pair(H, dtx);
      },
      st.lo, st.hi);
}

}  // namespace asymptotica::distribution
