#include "doctest.h"
#include "oracles.hpp"
#include "spinweil/clifford.hpp"
#include "spinweil/serialize.hpp"

using namespace spinweil;

namespace {

using Cl = CliffordElement<Rat>;

Cl gen(int n, int bit) { return Cl::generator(n, bit); }
Cl one(int n) { return Cl::scalar(n, Rat(1)); }

Cl random_cl(int n, std::mt19937_64& rng, int density) {
  Cl x(n);
  std::uniform_int_distribution<MultiIndex> pick(0, full_mask(4 * n));
  for (int k = 0; k < density; ++k) x.add_term(pick(rng), oracle::rand_rat(rng));
  return x;
}

Vec<Rat> random_vec(int r, std::mt19937_64& rng) {
  Vec<Rat> v(r);
  for (auto& x : v) x = oracle::rand_rat(rng);
  return v;
}

GradedElement<Rat> random_spinor(int n, std::mt19937_64& rng) {
  GradedElement<Rat> s(basis_S(n));
  for (MultiIndex m = 0; m <= full_mask(2 * n); ++m) s.add_term(m, oracle::rand_rat(rng));
  return s;
}

}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("product examples") {
    LatticeV L{1};
    auto e1 = gen(1, L.e(1)), f1 = gen(1, L.f(1));
    CHECK(cl_mul(e1, f1) + cl_mul(f1, e1) == one(1));
    CHECK(cl_mul(e1, e1).is_zero());
    CHECK(cl_mul(e1 + f1, e1 + f1) == one(1));
    CHECK_THROWS_AS(cl_mul(e1, gen(2, 0)), std::invalid_argument);
  }

  TEST_CASE("product agrees with the rewriting oracle") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 2; ++n)
      for (int k = 0; k < 30; ++k) {
        auto a = random_cl(n, rng, 4), b = random_cl(n, rng, 4);
        CHECK(cl_mul(a, b) == oracle::mul(a, b));
      }
    // all basis word pairs for n = 1
    for (MultiIndex a = 0; a < 16; ++a)
      for (MultiIndex b = 0; b < 16; ++b) CHECK(cl_mul(Cl::word(1, a), Cl::word(1, b)) == oracle::mul(Cl::word(1, a), Cl::word(1, b)));
  }

  TEST_CASE("associativity") {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 20; ++k) {
      auto a = random_cl(2, rng, 3), b = random_cl(2, rng, 3), c = random_cl(2, rng, 3);
      CHECK(cl_mul(cl_mul(a, b), c) == cl_mul(a, cl_mul(b, c)));
    }
  }

  TEST_CASE("tau and alpha") {
    auto e1 = gen(1, 0), f1 = gen(1, 2);
    CHECK(cl_tau(cl_mul(e1, f1)) == one(1) - cl_mul(e1, f1));
    CHECK(cl_alpha(e1) == -e1);
    CHECK(cl_tau(one(1)) == one(1));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
      auto a = random_cl(2, rng, 3), b = random_cl(2, rng, 3);
      CHECK(cl_tau(cl_mul(a, b)) == cl_mul(cl_tau(b), cl_tau(a)));
      CHECK(cl_alpha(cl_mul(a, b)) == cl_mul(cl_alpha(a), cl_alpha(b)));
      CHECK(cl_tau(cl_tau(a)) == a);
      CHECK(cl_star(cl_star(a)) == a);
    }
  }

  TEST_CASE("spin module examples") {
    BasisPtr S = basis_S(1);
    auto unit = GradedElement<Rat>::one(S);
    auto e1s = GradedElement<Rat>::monomial(S, 1u);
    CHECK(m_action(gen(1, 0), unit) == e1s);
    CHECK(m_action(gen(1, 2), e1s) == unit);
    CHECK(m_action(gen(1, 2), unit).is_zero());
    CHECK_THROWS_AS(m_action(gen(2, 0), unit), std::invalid_argument);
  }

  TEST_CASE("generators act by the first-principles matrices") {
    for (int n = 1; n <= 2; ++n)
      for (int b = 0; b < 4 * n; ++b) CHECK(m_matrix(gen(n, b)) == oracle::generator_matrix(n, b));
  }

  TEST_CASE("Clifford relation on S, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      LatticeV L{n};
      std::vector<Matrix<Rat>> M;
      for (int b = 0; b < 4 * n; ++b) M.push_back(m_matrix(gen(n, b)));
      int dim = 1 << (2 * n);
      for (int a = 0; a < 4 * n; ++a)
        for (int b = a; b < 4 * n; ++b) {
          Rat p = pair_V(L, L.unit<Rat>(a), L.unit<Rat>(b));
          CHECK(M[a] * M[b] + M[b] * M[a] == scaled(Matrix<Rat>::identity(dim), p));
        }
    }
  }

  TEST_CASE("m is multiplicative") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 10; ++k) {
      auto a = random_cl(2, rng, 3), b = random_cl(2, rng, 3);
      CHECK(m_matrix(cl_mul(a, b)) == m_matrix(a) * m_matrix(b));
    }
  }

  TEST_CASE("m_v is self-adjoint for the Mukai pairing") {
    std::mt19937_64 rng(10);
    for (int n = 1; n <= 2; ++n) {
      for (int k = 0; k < 10; ++k) {
        auto v = Cl::from_vector(n, random_vec(4 * n, rng));
        auto s = random_spinor(n, rng), t = random_spinor(n, rng);
        CHECK(mukai_pairing(m_action(v, s), t) == mukai_pairing(s, m_action(v, t)));
      }
    }
  }

  TEST_CASE("conjugation by a unit vector") {
    LatticeV L{2};
    auto v = Cl::from_vector(2, [&] {
      auto x = L.unit<Rat>(L.e(1));
      x[L.f(1)] = 1;
      return x;
    }());
    auto e2 = L.unit<Rat>(L.e(2));
    auto r = conjugate_vector(v, v, e2);
    for (auto& c : e2) c = -c;
    CHECK(r == e2);
    CHECK(conjugate_vector(v, v, L.unit<Rat>(L.e(1))) == L.unit<Rat>(L.f(1)));
  }

  TEST_CASE("spin_from_pair") {
    LatticeV L{2};
    auto h = [&](int i) {
      auto x = L.unit<Rat>(L.e(i));
      x[L.f(i)] = 1;
      return x;
    };
    auto g1 = spin_from_pair(L, h(1), h(1));
    CHECK(g1.element() == one(2));
    CHECK(g1.rho_matrix() == Matrix<Rat>::identity(8));
    auto g = spin_from_pair(L, h(1), h(2));
    CHECK(norm_char(g.element()) == 1);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10; ++k) {
      auto x = random_vec(8, rng), y = random_vec(8, rng);
      CHECK(pair_V(L, rho(g, x), rho(g, y)) == pair_V(L, x, y));
    }
    // rho_{-g} = rho_g
    SpinElement<Rat> neg(-g.element());
    CHECK(neg.rho_matrix() == g.rho_matrix());
    CHECK_THROWS_AS(spin_from_pair(L, L.unit<Rat>(0), L.unit<Rat>(1)), std::invalid_argument);
  }

  TEST_CASE("Spin certificate rejects non-members") {
    CHECK_THROWS_AS(SpinElement<Rat>(gen(1, 0)), std::domain_error);
    CHECK_THROWS_AS(SpinElement<Rat>(Cl::scalar(1, Rat(2))), std::domain_error);
  }

  TEST_CASE("exponential of nilpotent even elements") {
    CHECK(spin_exp_even_nilpotent(Cl(1)).element() == one(1));
    auto u = cl_mul(gen(1, 0), gen(1, 1));
    auto g = spin_exp_even_nilpotent(u);
    CHECK(g.element() == one(1) + u);
    // acts on S as cup product with exp(e1 ^ e2)
    BasisPtr S = basis_S(1);
    auto ex = wedge_exp(GradedElement<Rat>::monomial(S, 3u));
    std::mt19937_64 rng(12);
    auto s = random_spinor(1, rng);
    CHECK(m_action(g.element(), s) == wedge(ex, s));
    CHECK_THROWS_AS(cl_exp_nilpotent(cl_mul(gen(1, 0), gen(1, 2))), std::domain_error);
    CHECK_THROWS_AS(spin_exp_even_nilpotent(gen(1, 0)), std::invalid_argument);
  }

  TEST_CASE("norm character") {
    auto v = gen(1, 0) + gen(1, 2);
    CHECK(norm_char(v) == 1);
    CHECK(norm_char(Cl::scalar(1, Rat(2))) == 4);
  }

  TEST_CASE("infinitesimal action") {
    LatticeV L{1};
    BasisPtr S = basis_S(1);
    auto unit = GradedElement<Rat>::one(S);
    CHECK(lie_action(1, L.unit<Rat>(L.e(1)), L.unit<Rat>(L.e(2)), unit) == GradedElement<Rat>::monomial(S, 3u));
    auto e2 = GradedElement<Rat>::monomial(S, 2u);
    auto r = lie_action(1, L.unit<Rat>(L.e(1)), L.unit<Rat>(L.f(1)), e2);
    CHECK(r == e2 * Rat(rat(-1, 2)));
    std::mt19937_64 rng(13);
    auto x = random_vec(4, rng);
    CHECK(lie_action(1, x, x, random_spinor(1, rng)).is_zero());
  }

  TEST_CASE("Clifford JSON") {
    std::mt19937_64 rng(14);
    auto a = random_cl(2, rng, 5);
    CHECK(clifford_from_json<Rat>(to_json(a)) == a);
    Json j = {{"n", 1}, {"words", {{{"word", {"f1", "e1"}}, {"coeff", "1"}}}}};
    CHECK(clifford_from_json<Rat>(j) == one(1) - cl_mul(gen(1, 0), gen(1, 2)));
    Json bad = {{"n", 1}, {"words", {{{"word", {"e3"}}, {"coeff", "1"}}}}};
    CHECK_THROWS_AS(clifford_from_json<Rat>(bad), InputError);
    CHECK_THROWS_AS(clifford_from_json<Rat>(Json{{"n", 1}}), InputError);
  }
}
