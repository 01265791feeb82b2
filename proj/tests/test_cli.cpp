#include "doctest.h"
#include "spinweil/cli.hpp"
#include "spinweil/thetaring.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace spinweil;

namespace {

CommandConfig cfg(std::string sub) {
  CommandConfig c;
  c.subcommand = std::move(sub);
  return c;
}

std::string one_plus_pt(int n, long d) {
  auto w = GradedElement<Rat>::one(basis_S(n));
  w.add_term(full_mask(2 * n), Rat(d));
  return to_json(w).dump();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("igusa") {
    auto c = cfg("igusa");
    c.input = one_plus_pt(3, 2);
    auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report["J_text"] == "-1");
    CHECK(r.report["J"] == to_json(Rat(-1)));
    CHECK(r.report["coords"]["y0"] == to_json(Rat(2)));
  }

  TEST_CASE("igusa malformed input") {
    auto c = cfg("igusa");
    CHECK(run(c).exit_code == 2);  // no input
    c.input = "{not json";
    CHECK(run(c).exit_code == 2);
    c.input = one_plus_pt(2, 1);
    CHECK(run(c).exit_code == 2);  // wrong n
    c.input = to_json(GradedElement<Rat>::monomial(basis_S(3), 1u)).dump();
    CHECK(run(c).exit_code == 2);  // odd element
    c.input = "/nonexistent/w.json";
    auto r = run(c);
    CHECK(r.exit_code == 2);
    CHECK(r.report.contains("error"));
  }

  TEST_CASE("secant") {
    auto c = cfg("secant");
    c.n = 2;
    c.d = 12;
    auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report["invariants_ok"] == true);
    CHECK(r.report["d_squarefree"] == 3);
    auto th = standard_theta(3);
    auto w = GradedElement<Rat>::one(basis_S(3)) * Rat(2) - wedge(th, th) * Rat(5);
    auto e = cfg("secant");
    e.input = to_json(w).dump();
    auto s = run(e);
    CHECK(s.exit_code == 0);
    CHECK(s.report["d_squarefree"] == 5);
    // a secant bundle round-trips through the command
    auto again = cfg("secant");
    again.input = r.report.dump();
    CHECK(run(again).report["d_squarefree"] == 3);
    auto bad = cfg("secant");
    bad.input = one_plus_pt(2, 1);
    CHECK(run(bad).exit_code == 2);
    auto nod = cfg("secant");
    CHECK(run(nod).exit_code == 2);
  }

  TEST_CASE("hermitian") {
    auto c = cfg("hermitian");
    c.n = 3;
    c.d = 2;
    auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report["det"] == to_json(Rat(-512)));
    CHECK(r.report["signature"]["positive"] == 3);
    CHECK(r.report["signature"]["negative"] == 3);
    CHECK(r.report["real_part_signature"]["positive"] == 6);
    auto split = cfg("hermitian");
    split.input = one_plus_pt(3, 1);
    CHECK(run(split).exit_code == 2);
  }

  TEST_CASE("chevalley-check") {
    for (int n = 1; n <= 2; ++n) {
      auto c = cfg("chevalley-check");
      c.n = n;
      auto r = run(c);
      CHECK(r.exit_code == 0);
      CHECK(r.report["pass"] == true);
      CHECK(r.report["suites"].size() == 3);
    }
    auto bad = cfg("chevalley-check");
    bad.n = 5;
    CHECK(run(bad).exit_code == 2);
  }

  TEST_CASE("determinism under a fixed seed") {
    auto c = cfg("chevalley-check");
    c.n = 3;
    c.seed = 11;
    CHECK(run(c).report.dump() == run(c).report.dump());
  }

  TEST_CASE("theta") {
    auto c = cfg("theta");
    c.formula = "ch-secant-ideal";
    c.d = 4;
    auto r = run(c);
    CHECK(r.exit_code == 0);
    auto p = theta_from_json(r.report);
    CHECK(p == ch_secant_ideal_threefold(4));
    CHECK(p[2] == QuadExt(-2));
    CHECK(p[3] * QuadExt(6) == QuadExt(-4));
    c.formula = "genus4";
    c.a3 = 1;
    auto g = run(c);
    CHECK(g.report["a0"] == to_json(Rat(40)));
    c.formula = "alpha-beta";
    c.n = 4;
    CHECK(run(c).report.contains("beta"));
    c.formula = "nonsense";
    CHECK(run(c).exit_code == 2);
    auto nod = cfg("theta");
    nod.formula = "exp-sqrt";
    CHECK(run(nod).exit_code == 2);
  }

  TEST_CASE("contraction-kernel") {
    auto c = cfg("contraction-kernel");
    c.formula = "ch-secant-ideal";
    c.d = 1;
    auto r = run(c);
    CHECK(r.report["rank"] == 6);
    CHECK(r.report["kernel_dim"] == 9);
    CHECK(r.report["ht_dim"] == 15);
    auto one = cfg("contraction-kernel");
    one.input = to_json(ThetaPoly::constant(3, QuadExt(1))).dump();
    CHECK(run(one).report["rank"] == 3);
    auto q = cfg("contraction-kernel");
    q.input = to_json(texp(QuadExt::omega(2), 3)).dump();
    CHECK(run(q).exit_code == 2);
  }

  TEST_CASE("fixtures") {
    auto c = cfg("fixture");
    c.name = "theta-n3";
    CHECK(run(c).report == to_json(standard_theta(3)));
    c.name = "alpha-n3-d2";
    auto a = run(c);
    CHECK(theta_from_json(a.report["poly"]) ==
          ThetaPoly::constant(3, QuadExt(1)) - ThetaPoly::theta(3) * ThetaPoly::theta(3));
    for (std::string name : {"beta-n2-d3", "W1-n2-d1", "c1-n1", "secant-ideal-d2"}) {
      c.name = name;
      CHECK(run(c).exit_code == 0);
    }
    for (std::string name : {"unknown", "theta-n9", "theta-n99999999999999999999999", "alpha-n3-d0"}) {
      c.name = name;
      CHECK(run(c).exit_code == 2);
    }
    CHECK_THROWS_AS(emit_fixture("unknown"), InputError);
  }

  TEST_CASE("output file") {
    auto path = std::filesystem::temp_directory_path() / "spinweil_cli_test.json";
    auto c = cfg("fixture");
    c.name = "c1-n1";
    c.output = path.string();
    auto r = run(c);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    CHECK(Json::parse(in) == r.report);
    std::filesystem::remove(path);
  }

  TEST_CASE("unknown subcommand") { CHECK(run(cfg("frobnicate")).exit_code == 2); }

  TEST_CASE("verify quick") {
    auto c = cfg("verify");
    c.threads = 1;
    auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report["failed"] == 0);
    CHECK(r.report["checks"].size() == check_registry().size());
  }
}
