#include <unistd.h>

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "asymptotica/errors.hpp"
#include "asymptotica/harness/expression.hpp"
#include "asymptotica/harness/runner.hpp"

using namespace asymptotica;
using namespace asymptotica::harness;

namespace {

int exitFor(const Error& e) {
  switch (e.category()) {
    case Error::Category::Configuration: return kExitConfig;
    default: return kExitNumeric;
  }
}

int repl(const nonarch::FieldContext& ctx) {
  std::string line;
  const bool tty = isatty(0);
  while (true) {
    if (tty) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == "quit" || line == "exit") break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      const auto r = evaluateLine(line, ctx);
      std::cout << r.value << "\n  class: " << r.scaleClass << "\n  st: " << r.standardPart << "\n";
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic experiments over a non-Archimedean field"};
  app.require_subcommand(1);

  std::string configPath, out, coeff;
  int seed = 0, truncation = -1;
  std::vector<std::string> overrides;
  bool quiet = false;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--coeff", coeff, "Coefficient domain")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--truncation", truncation, "Truncation order K")->check(CLI::NonNegativeNumber);
  };

  for (const auto& name : ExperimentConfig::experiments()) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " experiment");
    sub->add_option("--config", configPath, "Flat key = value config file");
    sub->add_option("--out", out, "Output directory");
    sub->add_option("--seed", seed, "Seed for randomized inputs");
    sub->add_option("--set", overrides, "Override a config key: key=value")->take_all();
    sub->add_flag("--quiet", quiet, "Only print the verdict");
    addCommon(sub);
  }
  auto* replCmd = app.add_subcommand("repl", "Evaluate field expressions interactively");
  addCommon(replCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    auto* sub = app.get_subcommands().front();
    if (sub == replCmd) {
      nonarch::FieldContext ctx;
      if (!coeff.empty()) ctx.domain = nonarch::parseCoeffDomain(coeff);
      if (truncation >= 0) ctx.truncation = truncation;
      return repl(ctx);
    }
    ExperimentConfig config = configPath.empty() ? ExperimentConfig() : ExperimentConfig::fromFile(configPath);
    config.set("experiment", sub->get_name());
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
      config.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!out.empty()) config.set("out", out);
    if (sub->count("--seed")) config.set("seed", std::to_string(seed));
    if (!coeff.empty()) config.set("coeff", coeff);
    if (truncation >= 0) config.set("truncation", std::to_string(truncation));

    const RunOutcome o = runExperiment(config);
    if (quiet) {
      std::cout << o.summary["verdict"].get<std::string>() << "\n";
    } else {
      std::cout << o.summary.dump(2) << "\n";
      for (const auto& f : o.files) std::cerr << "wrote " << f << "\n";
    }
    return o.pass ? kExitPass : kExitVerdict;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
