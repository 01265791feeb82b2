// JSON-in/JSON-out command surface.
#pragma once

#include "spinweil/checks.hpp"
#include "spinweil/serialize.hpp"

#include <optional>
#include <string>

namespace spinweil {

struct CommandConfig {
  std::string subcommand;  // igusa | secant | hermitian | chevalley-check | theta | contraction-kernel | verify | fixture
  int n = 3;
  std::optional<long> d;
  std::string input;       // path or inline JSON
  std::string output;      // empty: stdout
  std::uint64_t seed = 7;
  Level level = Level::quick;
  std::string formula;     // theta, contraction-kernel
  std::string name;        // fixture
  long rho = 0, tau = 1, q = 1, a3 = 1;
  std::optional<unsigned> threads;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 failed check, 2 malformed input
  Json report;
};

RunResult run(const CommandConfig& config);

// Canonical JSON for named objects: theta-n<k>, alpha-n<k>-d<d>, beta-n<k>-d<d>,
// W1-n<k>-d<d>, c1-n<k>, secant-ideal-d<d>. Throws InputError on unknown names.
Json emit_fixture(const std::string& name);

}  // namespace spinweil
