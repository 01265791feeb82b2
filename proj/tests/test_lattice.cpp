#include "doctest.h"
#include "oracles.hpp"
#include "spinweil/lattice.hpp"
#include "spinweil/serialize.hpp"
#include "spinweil/spinors.hpp"

using namespace spinweil;

namespace {

Vec<Rat> random_vec(int r, std::mt19937_64& rng) {
  Vec<Rat> v(r);
  for (auto& x : v) x = oracle::rand_rat(rng, -2, 2);
  return v;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("pairing examples") {
    LatticeV L{1};
    auto e1 = L.unit<Rat>(L.e(1)), e2 = L.unit<Rat>(L.e(2)), f1 = L.unit<Rat>(L.f(1));
    CHECK(pair_V(L, e1, f1) == 1);
    CHECK(pair_V(L, e1, e2) == 0);
    Vec<Rat> v(4);
    for (int i = 0; i < 4; ++i) v[i] = e1[i] + f1[i];
    CHECK(pair_V(L, v, v) == 2);
    CHECK_THROWS_AS(pair_V(L, e1, Vec<Rat>(3)), std::invalid_argument);
  }

  TEST_CASE("Gram matrix is hyperbolic with signature (2n,2n)") {
    for (int n = 1; n <= 3; ++n) {
      LatticeV L{n};
      auto G = L.gram();
      for (int a = 0; a < 4 * n; ++a)
        for (int b = 0; b < 4 * n; ++b) CHECK(G(a, b) == pair_V(L, L.unit<Rat>(a), L.unit<Rat>(b)));
      auto in = inertia_of(G);
      CHECK(in.positive == 2 * n);
      CHECK(in.negative == 2 * n);
      CHECK(is_isotropic(L, e_block(n)));
      CHECK(is_isotropic(L, f_block(n)));
    }
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_of(Matrix<Rat>(4, 4)).dim() == 4);
    CHECK(kernel_of(Matrix<Rat>::identity(4)).dim() == 0);
    Matrix<Rat> proj(4, 4);
    proj(0, 0) = 1;
    proj(1, 1) = 1;
    CHECK(kernel_of(proj) == f_block(1));
  }

  TEST_CASE("isotropy examples") {
    LatticeV L{1};
    CHECK(is_isotropic(L, e_block(1)));
    Vec<Rat> v{1, 0, 1, 0};
    CHECK_FALSE(is_isotropic(L, Subspace<Rat>::span({v}, 4)));
    for (long d : {1L, 2L, 3L}) {
      auto s = standard_secant(2, d);
      CHECK(is_isotropic(LatticeV{2}, s.W1));
      CHECK(s.W1.dim() == 4);
    }
  }

  TEST_CASE("intersection examples") {
    CHECK(intersect(e_block(2), f_block(2)).dim() == 0);
    CHECK(intersect(e_block(2), e_block(2)) == e_block(2));
    for (int n = 1; n <= 3; ++n) {
      auto s = standard_secant(n, 2);
      CHECK(intersect(s.W1, s.W2).dim() == 0);
    }
  }

  TEST_CASE("dimension formula for random subspaces") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 40; ++k) {
      int r = 8, a = 1 + k % 5, b = 1 + (k / 5) % 5;
      std::vector<Vec<Rat>> ga, gb;
      for (int i = 0; i < a; ++i) ga.push_back(random_vec(r, rng));
      for (int i = 0; i < b; ++i) gb.push_back(random_vec(r, rng));
      // force some overlap
      if (k % 3 == 0) gb.push_back(ga[0]);
      auto A = Subspace<Rat>::span(ga, r), B = Subspace<Rat>::span(gb, r);
      CHECK(intersect(A, B).dim() + subspace_sum(A, B).dim() == A.dim() + B.dim());
    }
  }

  TEST_CASE("maximal isotropic subspaces equal their orthogonal") {
    for (int n = 1; n <= 3; ++n) {
      LatticeV L{n};
      CHECK(orthogonal_complement(L, e_block(n)) == e_block(n));
      auto s = standard_secant(n, 3);
      CHECK(orthogonal_complement(L, s.W1) == s.W1);
    }
  }

  TEST_CASE("conjugate subspace over Q(sqrt(-d))") {
    auto s = standard_secant(2, 5);
    CHECK(conj_subspace(s.W1) == s.W2);
    CHECK(conj_subspace(conj_subspace(s.W1)) == s.W1);
  }

  TEST_CASE("exact linear algebra helpers") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; ++k) {
      Matrix<Rat> A(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A(i, j) = oracle::rand_rat(rng);
      if (is_zero(determinant(A))) continue;
      CHECK(A * inverse_of(A) == Matrix<Rat>::identity(4));
      Vec<Rat> b = random_vec(4, rng);
      auto x = solve_linear(A, b);
      REQUIRE(x);
      CHECK(A * *x == b);
    }
    CHECK(inertia_of(Matrix<Rat>::identity(5)).positive == 5);
    Matrix<Rat> D(2, 2);
    D(0, 0) = 1;
    D(1, 1) = -1;
    auto in = inertia_of(D);
    CHECK((in.positive == 1 && in.negative == 1));
  }

  TEST_CASE("principal polarization") {
    for (int n = 1; n <= 4; ++n) {
      auto th = standard_theta(n);
      auto p = GradedElement<Rat>::one(basis_S(n));
      for (int k = 0; k < n; ++k) p = wedge(p, th);
      Rat fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      CHECK(integral_X(p) == fact);  // Theta^n / n! = [pt]
    }
  }

  TEST_CASE("Subspace and matrix JSON round trip") {
    auto s = standard_secant(2, 3);
    CHECK(subspace_from_json<QuadExt>(to_json(s.W1)) == s.W1);
    CHECK(subspace_from_json<Rat>(to_json(e_block(2))) == e_block(2));
    auto G = LatticeV{2}.gram();
    CHECK(matrix_from_json<Rat>(to_json(G)) == G);
    CHECK_THROWS_AS(matrix_from_json<Rat>(Json{{"rows", 2}, {"cols", 2}, {"entries", {{"1"}}}}), InputError);
  }
}
