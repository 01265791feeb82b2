#include "doctest.h"
#include "oracles.hpp"
#include "spinweil/weil.hpp"

using namespace spinweil;

namespace {

Vec<Rat> random_vec(int r, std::mt19937_64& rng) {
  Vec<Rat> v(r);
  for (auto& x : v) x = oracle::rand_rat(rng);
  return v;
}

Matrix<Rat> neg(const Matrix<Rat>& m) { return scaled(m, Rat(-1)); }

}  // namespace

TEST_SUITE("weil") {
  TEST_CASE("CM structure of the standard secant") {
    for (int n = 1; n <= 3; ++n)
      for (long d : {1L, 2L, 3L}) {
        auto C = cm_from_secant(standard_secant(n, d));
        int r = 4 * n;
        CHECK(C.f * C.f == scaled(Matrix<Rat>::identity(r), Rat(-d)));
        LatticeV L{n};
        auto G = L.gram();
        // anti-self-dual and a d-similarity
        CHECK(C.f.transpose() * G == neg(G * C.f));
        CHECK(C.f.transpose() * G * C.f == scaled(G, Rat(d)));
        // f sends H^1(Xhat) into H^1(X)
        for (int i = 1; i <= 2 * n; ++i) {
          auto img = C.f * L.unit<Rat>(L.f(i));
          for (int j = 1; j <= 2 * n; ++j) CHECK(is_zero(img[L.f(j)]));
        }
      }
  }

  TEST_CASE("split secants have no CM structure") {
    GradedElement<Rat> w = GradedElement<Rat>::one(basis_S(3));
    w.add_term(full_mask(6), Rat(1));
    CHECK_THROWS_AS(cm_from_secant(secant_plane(w)), std::domain_error);
  }

  TEST_CASE("the form Xi") {
    std::mt19937_64 rng(41);
    auto C = cm_from_secant(standard_secant(2, 3));
    for (int k = 0; k < 10; ++k) {
      auto x = random_vec(8, rng), y = random_vec(8, rng);
      CHECK(is_zero(xi_form(C, x, x)));
      CHECK(xi_form(C, x, y) == -xi_form(C, y, x));
      CHECK(xi_form(C, C.f * x, C.f * y) == 3 * xi_form(C, x, y));
    }
    CHECK(xi_matrix(C) == neg(xi_matrix(C).transpose()));
  }

  TEST_CASE("H is hermitian and K-sesquilinear") {
    std::mt19937_64 rng(42);
    for (long d : {1L, 2L, 5L}) {
      auto C = cm_from_secant(standard_secant(2, d));
      QuadExt w = QuadExt::omega(d);
      for (int k = 0; k < 10; ++k) {
        auto x = random_vec(8, rng), y = random_vec(8, rng);
        CHECK(hermitian_H(C, x, y) == quad_conj(hermitian_H(C, y, x)));
        CHECK(is_zero(hermitian_H(C, x, x).im()));
        CHECK(hermitian_H(C, x, C.f * y) == w * hermitian_H(C, x, y));
        CHECK(hermitian_H(C, C.f * x, y) == -w * hermitian_H(C, x, y));
        QuadExt lam(d, oracle::rand_rat(rng), oracle::rand_rat(rng));
        CHECK(hermitian_H(C, x, eta(C, lam, y)) == lam * hermitian_H(C, x, y));
      }
    }
  }

  TEST_CASE("H on the standard basis is purely imaginary") {
    auto C = cm_from_secant(standard_secant(3, 2));
    auto b = standard_hermitian_basis(3);
    for (const auto& x : b)
      for (const auto& y : b) CHECK(is_zero(hermitian_H(C, x, y).re()));
  }

  TEST_CASE("signatures") {
    for (int n = 1; n <= 3; ++n) {
      auto C = cm_from_secant(standard_secant(n, 2));
      auto s = gram_signature(real_part_gram(C));
      CHECK(s.positive == 2 * n);
      CHECK(s.negative == 2 * n);
    }
    auto id = gram_signature(Matrix<Rat>::identity(3));
    CHECK(id.positive == 3);
    Matrix<Rat> D(2, 2);
    D(0, 0) = 1;
    D(1, 1) = -1;
    CHECK(gram_signature(D).negative == 1);
    CHECK_THROWS(gram_signature(Matrix<Rat>(2, 2)));
  }

  TEST_CASE("discriminant examples") {
    CHECK(discriminant_H(cm_from_secant(standard_secant(3, 2)), standard_hermitian_basis(3)) == -512);
    CHECK(discriminant_H(cm_from_secant(standard_secant(2, 1)), standard_hermitian_basis(2)) == 1);
    for (int n = 1; n <= 3; ++n)
      for (long d : {1L, 2L, 3L}) {
        Rat expect = 1;
        for (int k = 0; k < 3 * n; ++k) expect *= d;
        if (n % 2) expect = -expect;
        CHECK(discriminant_H(cm_from_secant(standard_secant(n, d)), standard_hermitian_basis(n)) == expect);
      }
  }

  TEST_CASE("discriminant changes by a norm under rescaling") {
    long d = 2;
    auto C = cm_from_secant(standard_secant(2, d));
    auto b = standard_hermitian_basis(2);
    QuadExt lam(d, Rat(1), Rat(1));  // norm 1 + d = 3
    auto b2 = b;
    b2[0] = eta(C, lam, b2[0]);
    CHECK(discriminant_H(C, b2) == discriminant_H(C, b) * 3);
    CHECK_THROWS(discriminant_H(C, {b[0], eta(C, lam, b[0]), b[2], b[3]}));
  }

  TEST_CASE("standard complex structure") {
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 3; ++n) {
      auto I = standard_complex_structure(n);
      int r = 4 * n;
      CHECK(I * I == neg(Matrix<Rat>::identity(r)));
      LatticeV L{n};
      for (int k = 0; k < 5; ++k) {
        auto x = random_vec(r, rng), y = random_vec(r, rng);
        CHECK(pair_V(L, I * x, I * y) == pair_V(L, x, y));
      }
      for (long d : {1L, 2L, 3L}) CHECK(commutes(I, cm_from_secant(standard_secant(n, d)).f));
    }
  }

  TEST_CASE("g_P definiteness") {
    struct Case {
      int n;
      long d;
    };
    for (auto c : {Case{2, 1}, Case{3, 3}, Case{1, 2}}) {
      auto C = cm_from_secant(standard_secant(c.n, c.d));
      auto I = standard_complex_structure(c.n);
      auto g = g_form(C, I);
      CHECK(g == g.transpose());
      CHECK(inertia_of(g).negative == 4 * c.n);
      CHECK(inertia_of(g_form(C, neg(I))).positive == 4 * c.n);
    }
    auto C = cm_from_secant(standard_secant(1, 1));
    Matrix<Rat> J(4, 4);
    J(0, 2) = -1;
    J(2, 0) = 1;
    J(1, 3) = -1;
    J(3, 1) = 1;
    REQUIRE_FALSE(commutes(J, C.f));
    CHECK_THROWS_AS(g_form(C, J), std::domain_error);
  }

  TEST_CASE("centralizer dimensions") {
    for (int n = 1; n <= 3; ++n) {
      auto C = cm_from_secant(standard_secant(n, 1 + n % 2));
      auto dims = centralizer_dims(C, standard_complex_structure(n));
      CHECK(dims.so_f == 4 * n * n - 1);
      CHECK(dims.with_I == 2 * n * n - 1);
    }
  }
}
