#include "asymptotica/harness/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "asymptotica/distribution/experiments.hpp"
#include "asymptotica/errors.hpp"
#include "asymptotica/harness/expression.hpp"
#include "asymptotica/soliton/hopf.hpp"

namespace asymptotica::harness {

namespace {

using nlohmann::json;
using distribution::TestFunction;

std::string csvLine(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : ",") + c;
  return s + "\n";
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

json estimateJson(const numerics::OrderEstimate& e) {
  json j;
  j["slope"] = e.slope;
  j["intercept"] = e.intercept;
  j["rSquared"] = e.rSquared;
  j["excludedAtFloor"] = e.excludedAtFloor;
  j["inconclusive"] = e.inconclusive;
  for (const auto& [x, y] : e.samples) j["table"].push_back({x, y});
  return j;
}

int experimentGrid(const ExperimentConfig& c, int fallback) {
  const int g = c.integer("grid");
  return g > 0 ? g : fallback;
}

double tolerance(const ExperimentConfig& c, double fallback) {
  const double t = c.real("tolerance");
  return t > 0 ? t : fallback;
}

distribution::Distribution target(const std::string& spec) {
  using distribution::Distribution;
  if (spec == "delta") return Distribution::delta();
  if (spec == "heaviside") return Distribution::heaviside();
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<double> p;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        p.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ConfigError("bad polynomial coefficient '" + item + "'");
      }
    }
    if (p.empty()) throw ConfigError("empty polynomial target");
    return Distribution::polynomial(p);
  }
  throw ConfigError("unknown target '" + spec + "' (expected delta|heaviside|poly:c0,c1,...)");
}

RunOutcome mollifierRun(const ExperimentConfig& c) {
  const int n = c.integer("n");
  const auto phi = mollifier::buildMollifier(mollifier::MollifierSpec::forIndex(n, experimentGrid(c, mollifier::kDefaultGridPoints)));
  const auto rep = mollifier::verifyBasicSetMembership(phi, n);
  RunOutcome o;
  o.pass = rep.all();
  o.summary["membership"] = {{"symmetric", rep.symmetric}, {"supported", rep.supported},  {"unitMass", rep.unitMass},
                             {"momentsVanish", rep.momentsVanish}, {"l1Window", rep.l1Window}, {"mass", rep.mass},
                             {"maxMomentResidual", rep.maxMomentResidual}, {"supportRadius", rep.supportRadius},
                             {"l1", rep.l1}};
  o.summary["achievedL1"] = phi.achievedL1;
  o.csv = csvLine({"k", "moment"});
  for (std::size_t k = 0; k < phi.achievedMoments.size(); ++k) {
    o.summary["table"].push_back({k, phi.achievedMoments[k]});
    o.csv += csvLine({std::to_string(k), num(phi.achievedMoments[k])});
  }
  o.summary["mollifierValues"] = phi.phi.y();
  o.summary["gridPoints"] = phi.spec.gridPoints;
  return o;
}

RunOutcome regularizeRun(const ExperimentConfig& c) {
  distribution::RegularizationOptions opts;
  opts.nMin = c.integer("nmin");
  if (c.integer("grid") > 0) {
    const int g = c.integer("grid");
    opts.gridPoints = [g](int) { return g; };
  }
  opts.probes = distribution::probeGrid(c.real("probe.lo"), c.real("probe.hi"), c.integer("probe.points"));
  opts.floor = c.real("floor");
  const int nMax = std::max(c.integer("n"), opts.nMin);
  const auto panel = c.panel(distribution::defaultPanel());
  const auto T = target(c.text("target"));
  const auto rep = distribution::regularizationReport(T, nMax, panel, opts);
  RunOutcome o;
  o.csv = csvLine({"n", "tau_id", "pairing_error", "smoothing_error"});
  double worst = 0.0;
  for (const auto& row : rep.rows) {
    json r{{"n", row.n}, {"pairingError", row.pairingError}, {"smoothingError", row.smoothingError}};
    o.summary["table"].push_back(r);
    for (std::size_t i = 0; i < panel.size(); ++i) {
      o.csv += csvLine({std::to_string(row.n), rep.tauIds[i], num(row.pairingError[i]), num(row.smoothingError[i])});
      worst = std::max(worst, row.pairingError[i]);
    }
  }
  o.summary["tauIds"] = rep.tauIds;
  o.summary["pairingDecreasing"] = rep.pairingDecreasing;
  o.summary["smoothingDecreasing"] = rep.smoothingDecreasing;
  o.pass = rep.pairingDecreasing && rep.smoothingDecreasing;
  if (c.text("target").rfind("poly:", 0) == 0) {
    o.summary["polynomialTolerance"] = tolerance(c, 1e-10);
    o.pass = o.pass && worst <= tolerance(c, 1e-10);
  }
  return o;
}

RunOutcome embedRun(const ExperimentConfig& c) {
  const int n = c.integer("n");
  const auto phi = mollifier::buildMollifier(mollifier::MollifierSpec::forIndex(n, experimentGrid(c, 2 * n + 3)));
  const auto f = distribution::smoothFunction(c.text("function"));
  const auto scan = distribution::smoothEmbeddingScan(
      f, phi, c.epsGrid(), distribution::probeGrid(c.real("probe.lo"), c.real("probe.hi"), c.integer("probe.points")),
      c.real("floor"));
  RunOutcome o;
  o.pass = scan.pass;
  o.summary["estimate"] = estimateJson(scan.estimate);
  o.summary["table"] = o.summary["estimate"]["table"];
  o.summary["slope"] = scan.estimate.slope;
  o.summary["contractSlope"] = scan.contractSlope;
  o.summary["inconclusive"] = scan.inconclusive;
  o.csv = csvLine({"epsilon", "error"});
  for (const auto& [e, v] : scan.estimate.samples) o.csv += csvLine({num(e), num(v)});
  return o;
}

RunOutcome productRun(const ExperimentConfig& c) {
  const int n = std::max(1, c.integer("n"));
  const auto phi = mollifier::buildMollifier(mollifier::MollifierSpec::forIndex(n, experimentGrid(c, 2 * n + 3)));
  const double shift = c.real("shift") * phi.spec.supportRadius;
  const auto panel = c.panel({TestFunction::bump({1.0}, 1.0, 0.0, "bump_r1")});
  const TestFunction& tau = panel.front();
  const auto rows = distribution::regularizedProductExperiment(phi.phi, phi.phi.shifted(shift), c.epsGrid(), tau);
  RunOutcome o;
  const double half = 0.5 * tau(0.0);
  const double symTol = tolerance(c, 1e-4);
  o.csv = csvLine({"pair", "epsilon", "value"});
  for (const auto& r : rows) {
    json j{{"pair", r.label}, {"limit", r.limit}};
    for (const auto& [e, v] : r.values) {
      j["table"].push_back({e, v});
      o.csv += csvLine({r.label, num(e), num(v)});
    }
    o.summary["table"].push_back(j);
  }
  const bool symmetric = std::abs(rows[0].limit - half) <= symTol && std::abs(rows[1].limit - half) <= symTol;
  const bool dependent = std::abs(rows[2].limit - half) >= 0.05 * std::abs(tau(0.0));
  o.summary["halfTauAtZero"] = half;
  o.summary["symmetricWithinTolerance"] = symmetric;
  o.summary["mixedDiffersByFivePercent"] = dependent;
  o.summary["shift"] = shift;
  o.pass = symmetric && dependent;
  return o;
}

RunOutcome shockRun(const ExperimentConfig& c) {
  const double v = c.real("v");
  std::mt19937 rng(static_cast<std::uint32_t>(c.integer("seed")));
  std::uniform_real_distribution<double> ua(-2.0, 2.0), ul(0.1, 2.0), ut(0.1, 3.0);
  RunOutcome o;
  o.csv = csvLine({"a", "b", "t", "lhs", "rhs", "residual"});
  double worst = 0.0;
  int done = 0;
  const int cases = c.integer("cases");
  while (done < cases) {
    const double a = ua(rng), b = a + ul(rng), t = ut(rng);
    const auto s = distribution::shockConservationCheck(v, a, b, t);
    if (s.boundaryCase) continue;
    worst = std::max(worst, std::abs(s.residual));
    o.csv += csvLine({num(a), num(b), num(t), num(s.lhs), num(s.rhs), num(s.residual)});
    ++done;
  }
  const std::vector<std::pair<TestFunction, TestFunction>> pairs{
      {TestFunction::bump({1.0}, 1.0, 1.0), TestFunction::bump({1.0}, 0.5, 1.0)},
      {TestFunction::bump({1.0, 0.5}, 1.5, 0.5), TestFunction::bump({1.0}, 0.8, 1.2)},
      {TestFunction::bump({2.0, 0.0, -1.0}, 2.0, 1.5), TestFunction::bump({1.0, 1.0}, 0.6, 1.5)},
      {TestFunction::bump({1.0}, 0.7, 0.2), TestFunction::bump({1.0}, 0.4, 0.6)},
      {TestFunction::bump({1.0, -0.3}, 1.2, 2.0), TestFunction::bump({1.0}, 1.0, 2.0)}};
  double worstPairing = 0.0;
  for (const auto& [tx, tt] : pairs) {
    const double p = distribution::shockWeakPairing(v, tx, tt);
    worstPairing = std::max(worstPairing, std::abs(p));
    o.summary["weakPairings"].push_back(p);
  }
  o.summary["cases"] = cases;
  o.summary["worstResidual"] = worst;
  o.summary["worstWeakPairing"] = worstPairing;
  o.summary["residualTolerance"] = 1e-12;
  o.summary["pairingTolerance"] = 1e-6;
  o.pass = worst <= 1e-12 && worstPairing <= 1e-6;
  return o;
}

RunOutcome solitonRun(const ExperimentConfig& c) {
  const int m = c.integer("m");
  const int K = c.integer("coefficients") > 0 ? c.integer("coefficients") : soliton::minimalCoefficientCount(m);
  soliton::SolverOptions so;
  so.seed = static_cast<std::uint32_t>(c.integer("seed"));
  const auto profile = soliton::solveMomentSystem(m, K, so);
  const auto scan = soliton::residualScan({c.real("u0"), c.real("v"), c.real("t"), profile},
                                          c.panel(soliton::defaultSolitonPanel()), c.epsGrid(), {}, c.real("floor"));
  RunOutcome o;
  o.pass = scan.pass;
  o.summary = json::parse(soliton::scanJson(scan));
  o.summary["profile"] = json::parse(soliton::profileJson(profile, m + 2));
  double minSlope = INFINITY;
  for (const auto& r : scan.perTau) minSlope = std::min(minSlope, r.estimate.slope);
  o.summary["slope"] = minSlope;
  o.csv = soliton::scanCsv(scan);
  return o;
}

RunOutcome equivalenceRun(const ExperimentConfig& c) {
  const auto panel = c.panel({TestFunction::bump({1.0, 0.5}, 1.0, 0.0, "bump_linear")});
  const auto data = soliton::InitialData::fromTestFunction(panel.front(), c.real("u0"));
  const auto rep = soliton::equivalenceCheck(data, c.real("a"), c.real("b"), c.reals("times"), c.reals("steps"));
  RunOutcome o;
  const double tol = tolerance(c, 1e-5);
  o.csv = csvLine({"step", "conservative", "quasilinear", "integral"});
  for (const auto& r : rep.rows) {
    o.summary["table"].push_back({r.step, r.conservative, r.quasilinear, r.integral});
    o.csv += csvLine({num(r.step), num(r.conservative), num(r.quasilinear), num(r.integral)});
  }
  const auto& finest = rep.rows.back();
  const bool small = finest.conservative < tol && finest.quasilinear < tol && finest.integral < tol;
  auto near2 = [](const numerics::OrderEstimate& e) { return !e.inconclusive && std::abs(e.slope - 2.0) <= 0.3; };
  o.summary["orders"] = {{"conservative", estimateJson(rep.conservativeOrder)},
                         {"quasilinear", estimateJson(rep.quasilinearOrder)},
                         {"integral", estimateJson(rep.integralOrder)}};
  o.summary["slope"] = rep.conservativeOrder.slope;
  o.summary["residualTolerance"] = tol;
  o.summary["shockTime"] = data.shockTime();
  o.pass = small && near2(rep.conservativeOrder) && near2(rep.quasilinearOrder) && near2(rep.integralOrder);
  return o;
}

RunOutcome fieldRun(const ExperimentConfig& c) {
  nonarch::FieldContext ctx{nonarch::parseCoeffDomain(c.text("coeff")), c.integer("truncation")};
  const auto r = evaluateLine(c.text("expression"), ctx);
  RunOutcome o;
  o.pass = true;
  o.summary["value"] = r.value;
  o.summary["class"] = r.scaleClass;
  o.summary["standardPart"] = r.standardPart;
  o.csv = csvLine({"expression", "value", "standard_part"});
  o.csv += "\"" + c.text("expression") + "\",\"" + r.value + "\",\"" + r.standardPart + "\"\n";
  return o;
}

}  // namespace

RunOutcome computeExperiment(const ExperimentConfig& config) {
  config.validate();
  const std::string e = config.experiment();
  RunOutcome o;
  if (e == "mollifier") o = mollifierRun(config);
  else if (e == "regularize") o = regularizeRun(config);
  else if (e == "embed") o = embedRun(config);
  else if (e == "product") o = productRun(config);
  else if (e == "shock") o = shockRun(config);
  else if (e == "soliton") o = solitonRun(config);
  else if (e == "equivalence") o = equivalenceRun(config);
  else o = fieldRun(config);

  json inputs;
  for (const auto& [k, v] : config.values())
    if (k != "out") inputs[k] = v;
  o.summary["operation"] = e;
  o.summary["inputs"] = inputs;
  o.summary["verdict"] = o.pass ? "pass" : "fail";
  if (!o.summary.contains("table")) o.summary["table"] = json::array();
  if (!o.summary.contains("slope")) o.summary["slope"] = nullptr;
  return o;
}

RunOutcome runExperiment(const ExperimentConfig& config) {
  RunOutcome o = computeExperiment(config);
  const std::filesystem::path dir(config.text("out"));
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) throw ConfigError("cannot create output directory '" + dir.string() + "'");
  auto write = [&](const std::filesystem::path& p, const std::string& body) {
    std::ofstream out(p);
    if (!(out << body)) throw ConfigError("cannot write '" + p.string() + "'");
    o.files.push_back(p.string());
  };
  const std::string e = config.experiment();
  write(dir / (e + ".json"), o.summary.dump(2) + "\n");
  write(dir / (e + ".csv"), o.csv);
  if (e == "mollifier") {
    const int n = config.integer("n");
    const auto base = (dir / ("mollifier_n" + std::to_string(n))).string();
    const auto phi = mollifier::Mollifier::fromValues(
        mollifier::MollifierSpec::forIndex(n, o.summary["gridPoints"].get<int>()),
        o.summary["mollifierValues"].get<std::vector<double>>());
    mollifier::writeMollifier(phi, base);
    o.files.push_back(base + ".csv");
    o.files.push_back(base + ".json");
  }
  if (e == "soliton") write(dir / ("profile_m" + config.text("m") + ".json"), o.summary["profile"].dump(2) + "\n");
  return o;
}

}  // namespace asymptotica::harness
