#include "spinweil/cli.hpp"

#include "spinweil/chevalley.hpp"
#include "spinweil/igusa.hpp"
#include "spinweil/weil.hpp"

#include <fstream>
#include <regex>

namespace spinweil {

namespace {

long require_d(const CommandConfig& c) {
  if (!c.d) throw InputError("--d is required");
  if (*c.d <= 0) throw InputError("--d must be positive");
  return *c.d;
}

void require_n(int n, int lo, int hi) {
  if (n < lo || n > hi) throw InputError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Json coords_json(const IgusaCoords<Rat>& c) {
  return {{"x0", to_json(c.x0)}, {"x", to_json(c.x)}, {"y", to_json(c.y)}, {"y0", to_json(c.y0)}};
}

GradedElement<Rat> spinor_input(const CommandConfig& c) {
  if (c.input.empty()) throw InputError("--input is required");
  auto w = graded_from_json<Rat>(load_json_argument(c.input));
  if (w.basis()->name.rfind("S_X[n=", 0) != 0) throw InputError("expected an element of S_X, got basis " + w.basis()->name);
  return w;
}

RunResult cmd_igusa(const CommandConfig& c) {
  auto w = spinor_input(c);
  if (w.basis()->rank() != 6) throw InputError("igusa needs n = 3");
  for (const auto& t : w.terms())
    if (degree_of(t.first) % 2) throw InputError("igusa needs an even spinor");
  auto co = igusa_coords(w);
  Rat J = igusa_J_from_coords(co);
  return {0, {{"J", to_json(J)}, {"J_text", to_string(J)}, {"coords", coords_json(co)}}};
}

SecantData secant_for(const CommandConfig& c) {
  if (!c.input.empty()) {
    auto j = load_json_argument(c.input);
    if (j.contains("W")) return secant_from_json(j);
    auto w = graded_from_json<Rat>(j);
    if (w.basis()->name != "S_X[n=3]") throw InputError("secant extraction needs an element of S_X[n=3]");
    return secant_plane(w);
  }
  require_n(c.n, 1, 3);
  return standard_secant(c.n, require_d(c));
}

RunResult cmd_secant(const CommandConfig& c) {
  auto s = secant_for(c);
  Json out = to_json(s);
  out["invariants_ok"] = secant_invariant_violation(s).empty();
  if (!s.split) out["d_squarefree"] = secant_square_free_d(s);
  return {0, out};
}

// Greedy K-basis of V from the standard basis vectors, preferring the f-block.
std::vector<Vec<Rat>> k_basis(const CMStructure& C) {
  int n = C.secant.n;
  LatticeV L{n};
  std::vector<Vec<Rat>> basis, span;
  for (int k = 0; k < 4 * n && static_cast<int>(basis.size()) < 2 * n; ++k) {
    int coord = (k + 2 * n) % (4 * n);
    auto v = L.unit<Rat>(coord);
    auto trial = span;
    trial.push_back(v);
    trial.push_back(C.f * v);
    if (Subspace<Rat>::span(trial, 4 * n).dim() == static_cast<int>(trial.size())) {
      basis.push_back(v);
      span = trial;
    }
  }
  return basis;
}

RunResult cmd_hermitian(const CommandConfig& c) {
  auto C = cm_from_secant(secant_for(c));
  auto basis = k_basis(C);
  auto real = gram_signature(real_part_gram(C));
  Json out;
  out["d"] = C.d;
  out["signature"] = {{"positive", real.positive / 2}, {"negative", real.negative / 2}};
  out["real_part_signature"] = {{"positive", real.positive}, {"negative", real.negative}};
  out["det"] = to_json(discriminant_H(C, basis));
  out["gram"] = to_json(hermitian_gram(C, basis));
  Json b = Json::array();
  for (const auto& v : basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    b.push_back(row);
  }
  out["basis"] = b;
  return {0, out};
}

RunResult cmd_chevalley_check(const CommandConfig& c) {
  require_n(c.n, 1, 3);
  int n = c.n;
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32), static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  Json suites = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, std::optional<std::string> counterexample) {
    Json s = {{"name", name}, {"pass", !counterexample}};
    if (counterexample) s["counterexample"] = *counterexample;
    all = all && !counterexample;
    suites.push_back(s);
  };
  BasisPtr S = basis_S(n);
  int dim = 1 << (2 * n);
  // two-path agreement
  {
    std::optional<std::string> bad;
    int samples = n <= 2 ? dim * dim : (c.level == Level::full ? 500 : 60);
    for (int k = 0; k < samples && !bad; ++k) {
      MultiIndex K, Lm;
      if (n <= 2) {
        K = static_cast<MultiIndex>(k / dim);
        Lm = static_cast<MultiIndex>(k % dim);
      } else {
        K = static_cast<MultiIndex>(std::uniform_int_distribution<int>(0, dim - 1)(rng));
        Lm = static_cast<MultiIndex>(std::uniform_int_distribution<int>(0, dim - 1)(rng));
      }
      auto a = tilde_varphi(GradedElement<Rat>::monomial(S, K), GradedElement<Rat>::monomial(S, Lm));
      if (!(a == tilde_varphi_closed(n, K, Lm))) bad = "K=" + std::to_string(K) + " L=" + std::to_string(Lm);
    }
    record("two-path", bad);
  }
  if (n <= 2) {
    std::optional<std::string> bad;
    BasisPtr V = basis_V(n);
    for (MultiIndex M = 0; M < (1u << (4 * n)) && !bad; ++M) {
      auto e = GradedElement<Rat>::monomial(V, M);
      if (!(orlov_phi(orlov_phi_inverse(e)) == e)) bad = "basis key " + std::to_string(M);
    }
    record("orlov-inverse", bad);
    std::optional<std::string> tbad;
    for (int k = 0; k < 10 && !tbad; ++k) {
      auto g = random_spin(n, rng);
      auto r = twist_identity_check(g);
      if (!r.ok) tbad = "sample " + std::to_string(k) + " basis key " + std::to_string(*r.counterexample);
    }
    record("twist-identity", tbad);
  }
  return {all ? 0 : 1, {{"n", n}, {"suites", suites}, {"pass", all}}};
}

RunResult cmd_theta(const CommandConfig& c) {
  const std::string& f = c.formula;
  if (f == "ch-secant-ideal") return {0, to_json(ch_secant_ideal_threefold(require_d(c)))};
  if (f == "exp-sqrt") {
    require_n(c.n, 0, 64);
    return {0, to_json(texp(QuadExt::omega(require_d(c)), c.n))};
  }
  if (f == "alpha" || f == "beta" || f == "alpha-beta") {
    require_n(c.n, 0, 64);
    auto [a, b] = alpha_beta(c.n, require_d(c), c.rho, c.tau, c.q);
    if (f == "alpha") return {0, to_json(a)};
    if (f == "beta") return {0, to_json(b)};
    return {0, {{"alpha", to_json(a)}, {"beta", to_json(b)}}};
  }
  if (f == "genus4") {
    auto r = solve_genus4_coeffs(require_d(c), c.a3);
    return {0, {{"a0", to_json(r.a0)}, {"a1", to_json(r.a1)}, {"a2", to_json(r.a2)}}};
  }
  throw InputError("unknown formula '" + f + "' (ch-secant-ideal, exp-sqrt, alpha, beta, alpha-beta, genus4)");
}

RunResult cmd_contraction_kernel(const CommandConfig& c) {
  ThetaPoly ch;
  if (!c.input.empty()) {
    ch = theta_from_json(load_json_argument(c.input));
  } else if (c.formula == "ch-secant-ideal") {
    ch = ch_secant_ideal_threefold(require_d(c));
  } else {
    throw InputError("give --input with a theta polynomial or --formula ch-secant-ideal");
  }
  if (!ch.is_rational()) throw InputError("contraction-kernel needs rational coefficients");
  require_n(ch.n(), 1, 4);
  auto k = annihilator_kernel(ch);
  return {0, {{"n", ch.n()}, {"ht_dim", ht_dim(ch.n())}, {"rank", k.rank}, {"kernel_dim", k.kernel_dim}}};
}

RunResult cmd_verify(const CommandConfig& c) {
  CheckOptions opt{c.level, c.seed};
  auto results = run_checks(check_registry(), opt, c.threads.value_or(thread_cap()));
  Json checks = Json::array();
  int failed = 0;
  for (const auto& r : results) {
    Json e = {{"name", r.name}, {"criterion", r.criterion}, {"pass", r.pass}};
    if (!r.pass) {
      e["detail"] = r.detail;
      ++failed;
    }
    checks.push_back(e);
  }
  Json out = {{"level", c.level == Level::full ? "full" : "quick"},
              {"seed", c.seed},
              {"checks", checks},
              {"passed", static_cast<int>(results.size()) - failed},
              {"failed", failed}};
  return {failed ? 1 : 0, out};
}

}  // namespace

Json emit_fixture(const std::string& name) {
  std::smatch m;
  auto num = [&](int i) { return std::stol(m[i].str()); };
  auto small_n = [](long n) {
    if (n < 1 || n > 3) throw InputError("fixture dimension must be 1..3");
    return static_cast<int>(n);
  };
  if (std::regex_match(name, m, std::regex(R"(theta-n(\d+))"))) return to_json(standard_theta(small_n(num(1))));
  if (std::regex_match(name, m, std::regex(R"(c1-n(\d+))"))) return to_json(c1_poincare(small_n(num(1))));
  if (std::regex_match(name, m, std::regex(R"((alpha|beta)-n(\d+)-d(\d+))"))) {
    int n = small_n(std::stol(m[2].str()));
    long d = std::stol(m[3].str());
    if (d <= 0) throw InputError("fixture needs d > 0");
    auto [a, b] = alpha_beta(n, d, 0, 1, 1);
    const ThetaPoly& p = m[1].str() == "alpha" ? a : b;
    return {{"poly", to_json(p)}, {"class", to_json(embed_theta_rational(p))}};
  }
  if (std::regex_match(name, m, std::regex(R"(W1-n(\d+)-d(\d+))"))) {
    long d = num(2);
    if (d <= 0) throw InputError("fixture needs d > 0");
    return to_json(standard_secant(small_n(num(1)), d).W1);
  }
  if (std::regex_match(name, m, std::regex(R"(secant-ideal-d(\d+))"))) {
    long d = num(1);
    if (d <= 0) throw InputError("fixture needs d > 0");
    auto p = ch_secant_ideal_threefold(d);
    return {{"poly", to_json(p)}, {"class", to_json(embed_theta_rational(p))}};
  }
  throw InputError("unknown fixture '" + name + "'");
}

RunResult run(const CommandConfig& config) {
  try {
    RunResult r;
    const auto& s = config.subcommand;
    if (s == "igusa") r = cmd_igusa(config);
    else if (s == "secant") r = cmd_secant(config);
    else if (s == "hermitian") r = cmd_hermitian(config);
    else if (s == "chevalley-check") r = cmd_chevalley_check(config);
    else if (s == "theta") r = cmd_theta(config);
    else if (s == "contraction-kernel") r = cmd_contraction_kernel(config);
    else if (s == "verify") r = cmd_verify(config);
    else if (s == "fixture") r = {0, emit_fixture(config.name)};
    else throw InputError("unknown subcommand '" + s + "'");
    if (!config.output.empty()) {
      std::ofstream out(config.output);
      if (!out) throw InputError("cannot write " + config.output);
      out << r.report.dump(2) << "\n";
    }
    return r;
  } catch (const InputError& e) {
    return {2, {{"error", e.what()}}};
  } catch (const std::invalid_argument& e) {
    return {2, {{"error", e.what()}}};
  } catch (const std::domain_error& e) {
    return {2, {{"error", e.what()}}};
  } catch (const std::out_of_range& e) {
    return {2, {{"error", e.what()}}};
  }
}

}  // namespace spinweil
