#include "spinweil/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using spinweil::CommandConfig;
  CLI::App app{"Exact computations with spinors, Weil structures and Chern classes of abelian varieties"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::string level = "quick";
  long d = 0;
  unsigned threads = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dimension parameter n");
    sub->add_option("--d", d, "field parameter d > 0");
    sub->add_option("--input", cfg.input, "input JSON file or inline JSON");
    sub->add_option("--output", cfg.output, "write the report to this file");
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
    sub->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  };
  for (const char* name : {"igusa", "secant", "hermitian", "chevalley-check", "theta", "contraction-kernel", "verify", "fixture"}) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    std::string nm = name;
    if (nm == "theta" || nm == "contraction-kernel") {
      sub->add_option("--formula", cfg.formula, "named formula");
      sub->add_option("--rho", cfg.rho);
      sub->add_option("--tau", cfg.tau);
      sub->add_option("--q", cfg.q);
      sub->add_option("--a3", cfg.a3);
    }
    if (nm == "fixture") sub->add_option("--name", cfg.name, "fixture name")->required();
    if (nm == "verify") sub->add_option("--threads", threads, "worker threads (default: SPINWEIL_THREADS or all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  auto* sub = app.get_subcommands().front();
  if (sub->count("--d")) cfg.d = d;
  if (threads > 0) cfg.threads = threads;
  cfg.level = level == "full" ? spinweil::Level::full : spinweil::Level::quick;

  auto result = spinweil::run(cfg);
  if (cfg.output.empty() || result.exit_code == 2) {
    (result.exit_code == 2 ? std::cerr : std::cout) << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}
