// Named exact checks shared by the `verify` command and the acceptance runner.
#pragma once

#include "spinweil/clifford.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace spinweil {

enum class Level { quick, full };

struct CheckOptions {
  Level level = Level::quick;
  std::uint64_t seed = 7;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  bool pass = false;
  std::string detail;
};

struct NamedCheck {
  std::string name;
  int criterion;  // acceptance criterion number, 0 for supplementary checks
  std::string summary;
  std::function<std::string(const CheckOptions&, std::mt19937_64&)> body;  // empty string = pass
};

const std::vector<NamedCheck>& check_registry();

// Each check gets its own generator seeded from (seed, name), so results do not
// depend on scheduling.
CheckResult run_check(const NamedCheck& c, const CheckOptions& opt);

// Runs in parallel on at most `threads` workers; results come back in registry order.
std::vector<CheckResult> run_checks(const std::vector<NamedCheck>& checks, const CheckOptions& opt, unsigned threads);

// SPINWEIL_THREADS if set, else the hardware concurrency.
unsigned thread_cap();

// Random Spin elements: reflection pairs with entries in {-1,0,1}, exponentials of
// e-, f- and mixed nilpotent bivectors, exp(c Theta), and products of two of these.
SpinElement<Rat> random_spin(int n, std::mt19937_64& rng);
// All reflection pairs v1 v2 with entries in {-1,0,1} and (v1,v1) = (v2,v2) = +-2.
std::vector<SpinElement<Rat>> all_small_reflection_pairs(int n);
SpinElement<Rat> spin_exp_theta(int n, const Rat& c);

}  // namespace spinweil
