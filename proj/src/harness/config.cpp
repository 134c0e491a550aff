#include "asymptotica/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "asymptotica/errors.hpp"

namespace asymptotica::harness {

namespace {

const std::map<std::string, std::string>& defaults() {
  static const std::map<std::string, std::string> d{
      {"experiment", "field-eval"},
      {"n", "1"},
      {"nmin", "2"},
      {"m", "1"},
      {"coefficients", "0"},
      {"grid", "0"},
      {"eps.start", "0.1"},
      {"eps.stop", "0.001"},
      {"eps.perDecade", "5"},
      {"tau", "default"},
      {"probe.lo", "-2"},
      {"probe.hi", "2"},
      {"probe.points", "41"},
      {"floor", "1e-13"},
      {"tolerance", "0"},
      {"seed", "1"},
      {"out", "."},
      {"coeff", "exact"},
      {"truncation", "16"},
      {"expression", "st(3 + r - 2*r^2)"},
      {"function", "sin"},
      {"target", "delta"},
      {"u0", "0"},
      {"v", "1"},
      {"t", "0"},
      {"a", "-0.8"},
      {"b", "0.9"},
      {"times", "0.2,0.4"},
      {"steps", "2e-3,1e-3,5e-4"},
      {"shift", "0.5"},
      {"cases", "100"},
  };
  return d;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double toReal(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  }
  if (used != v.size() || !std::isfinite(x)) throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  return x;
}

bool fitsSlope(const std::string& e) { return e == "embed" || e == "soliton"; }

}  // namespace

ExperimentConfig::ExperimentConfig() : values_(defaults()) {}

const std::vector<std::string>& ExperimentConfig::experiments() {
  static const std::vector<std::string> e{"mollifier", "regularize", "embed",       "product",
                                          "shock",     "soliton",    "equivalence", "field-eval"};
  return e;
}

ExperimentConfig ExperimentConfig::fromText(const std::string& text) {
  ExperimentConfig c;
  std::stringstream ss(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(ss, line)) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineNo) + ": expected key = value");
    c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

ExperimentConfig ExperimentConfig::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return fromText(ss.str());
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (!defaults().count(key)) throw ConfigError("unknown config key '" + key + "'");
  values_[key] = value;
}

std::string ExperimentConfig::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  return it->second;
}

int ExperimentConfig::integer(const std::string& key) const {
  const std::string v = text(key);
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  }
  if (used != v.size()) throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  return x;
}

double ExperimentConfig::real(const std::string& key) const { return toReal(key, text(key)); }

std::vector<double> ExperimentConfig::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& s : split(text(key), ',')) out.push_back(toReal(key, s));
  return out;
}

std::vector<double> ExperimentConfig::epsGrid() const {
  const double start = real("eps.start"), stop = real("eps.stop");
  const int perDecade = integer("eps.perDecade");
  if (!(start > 0) || !(stop > 0)) throw ConfigError("eps grid bounds must be positive");
  if (!(start > stop)) throw ConfigError("eps grid must be strictly decreasing (eps.start > eps.stop)");
  if (perDecade < 1) throw ConfigError("eps.perDecade must be at least 1");
  const double decades = std::log10(start / stop);
  const int steps = static_cast<int>(std::floor(decades * perDecade + 1e-9));
  if (steps < 1) throw ConfigError("eps grid has a single point");
  std::vector<double> e;
  for (int i = 0; i <= steps; ++i) e.push_back(start * std::pow(10.0, -static_cast<double>(i) / perDecade));
  return e;
}

std::vector<distribution::TestFunction> parsePanel(const std::string& spec) {
  std::vector<distribution::TestFunction> out;
  for (const auto& entry : split(spec, ';')) {
    const auto parts = split(entry, ':');
    if (parts.size() < 3 || parts.size() > 4 || parts[0] != "bump")
      throw ConfigError("panel entry '" + entry + "' is not bump:radius:center[:p0,p1,...]");
    const double r = toReal("tau", parts[1]), c = toReal("tau", parts[2]);
    if (!(r > 0)) throw ConfigError("panel radius must be positive");
    std::vector<double> poly{1.0};
    if (parts.size() == 4) {
      poly.clear();
      for (const auto& p : split(parts[3], ',')) poly.push_back(toReal("tau", p));
      if (poly.empty()) throw ConfigError("panel polynomial is empty");
    }
    out.push_back(distribution::TestFunction::bump(poly, r, c, entry));
  }
  if (out.empty()) throw ConfigError("empty test-function panel");
  return out;
}

std::vector<distribution::TestFunction> ExperimentConfig::panel(
    const std::vector<distribution::TestFunction>& fallback) const {
  const std::string s = text("tau");
  if (s == "default") return fallback;
  return parsePanel(s);
}

void ExperimentConfig::validate() const {
  const std::string e = experiment();
  if (std::find(experiments().begin(), experiments().end(), e) == experiments().end())
    throw ConfigError("unknown experiment '" + e + "'");
  if (e != "field-eval" && e != "mollifier" && e != "shock" && e != "equivalence") {
    const auto eps = epsGrid();
    if (fitsSlope(e)) {
      if (eps.size() < 5) throw ConfigError("slope fits need at least 5 epsilons");
      if (std::log10(eps.front() / eps.back()) < 2.0 - 1e-9) throw ConfigError("slope fits need an eps grid spanning 2 decades");
    }
  }
  for (const char* k : {"n", "m", "nmin", "grid", "coefficients", "truncation", "seed", "probe.points", "cases"}) integer(k);
  for (const char* k : {"floor", "tolerance", "u0", "v", "t", "a", "b", "shift", "probe.lo", "probe.hi"}) real(k);
  if (integer("n") < 0 || integer("m") < 0) throw ConfigError("n and m must be non-negative");
  if (integer("truncation") < 0) throw ConfigError("truncation must be non-negative");
  if (text("coeff") != "exact" && text("coeff") != "float") throw ConfigError("coeff must be exact or float");
  if (text("tau") != "default") parsePanel(text("tau"));
}

}  // namespace asymptotica::harness
