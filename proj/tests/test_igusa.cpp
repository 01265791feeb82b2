#include "doctest.h"
#include "oracles.hpp"
#include "spinweil/clifford.hpp"
#include "spinweil/igusa.hpp"
#include "spinweil/lattice.hpp"

using namespace spinweil;

namespace {

BasisPtr S3() { return basis_S(3); }
GradedElement<Rat> unit() { return GradedElement<Rat>::one(S3()); }
GradedElement<Rat> pt(Rat c = 1) { return GradedElement<Rat>::monomial(S3(), full_mask(6), c); }

// e*_{ij}: the complementary 4-form with e_i ^ e_j ^ e*_{ij} = [pt]
GradedElement<Rat> dual(int i, int j, Rat c = 1) {
  return GradedElement<Rat>::monomial(S3(), igusa_dual_index(i, j), igusa_dual_sign(i, j) < 0 ? Rat(-c) : c);
}

Matrix<Rat> random_alternating(int m, std::mt19937_64& rng) {
  Matrix<Rat> A(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      A(i, j) = oracle::rand_rat(rng);
      A(j, i) = -A(i, j);
    }
  return A;
}

Matrix<Rat> symplectic(int r) {
  Matrix<Rat> A(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) {
    A(i, i + r) = 1;
    A(i + r, i) = -1;
  }
  return A;
}

GradedElement<Rat> random_even(std::mt19937_64& rng) {
  GradedElement<Rat> w(S3());
  for (MultiIndex m = 0; m < 64; ++m)
    if (degree_of(m) % 2 == 0) w.add_term(m, oracle::rand_rat(rng, -2, 2));
  return w;
}

}  // namespace

TEST_SUITE("igusa") {
  TEST_CASE("Pfaffian normalization") {
    CHECK(pfaffian(symplectic(1)) == 1);
    CHECK(pfaffian(symplectic(2)) == 1);
    CHECK(pfaffian(symplectic(3)) == 1);
    CHECK(pfaffian(Matrix<Rat>(4, 4)) == 0);
    CHECK(pfaffian(Matrix<Rat>(0, 0)) == 1);
    CHECK_THROWS_AS(pfaffian(Matrix<Rat>(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(pfaffian(Matrix<Rat>::identity(2)), std::invalid_argument);
  }

  TEST_CASE("Pfaffian against the matching-sum oracle, Pf^2 = det") {
    std::mt19937_64 rng(31);
    for (int m = 2; m <= 8; m += 2)
      for (int k = 0; k < 10; ++k) {
        auto A = random_alternating(m, rng);
        Rat p = pfaffian_standard(A);
        CHECK(p == oracle::pfaffian(A));
        CHECK(p * p == determinant(A));
      }
  }

  TEST_CASE("coordinate examples") {
    auto c = igusa_coords(pt());
    CHECK(c.x0 == 0);
    CHECK(c.y0 == 1);
    CHECK(c.x == Matrix<Rat>(6, 6));
    CHECK(c.y == Matrix<Rat>(6, 6));
    auto d = igusa_coords(GradedElement<Rat>::monomial(S3(), mask_from_indices({1, 4})));
    CHECK(d.x(0, 3) == 1);
    CHECK(d.x(3, 0) == -1);
    CHECK(d.y == Matrix<Rat>(6, 6));
    auto th = standard_theta(3);
    auto t = igusa_coords(wedge(th, th));
    for (auto [i, j] : {std::pair{3, 6}, {2, 5}, {1, 4}}) CHECK(t.y(i - 1, j - 1) == -2);
    CHECK(t.x0 == 0);
    CHECK(t.y0 == 0);
    // the dual basis pairs to [pt]
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        auto eij = GradedElement<Rat>::monomial(S3(), mask_from_indices({i, j}));
        CHECK(wedge(eij, dual(i, j)) == pt());
        CHECK(igusa_coords(dual(i, j)).y(i - 1, j - 1) == 1);
      }
    CHECK_THROWS_AS(igusa_coords(GradedElement<Rat>::one(basis_S(2))), std::invalid_argument);
    CHECK_THROWS_AS(igusa_coords(GradedElement<Rat>::monomial(S3(), 1u)), std::invalid_argument);
  }

  TEST_CASE("J examples") {
    for (long d = 1; d <= 6; ++d) {
      CHECK(igusa_J(unit() + pt(d)) == rat(-d * d, 4));
      CHECK(igusa_J(unit() + dual(1, 4) + dual(2, 5) + dual(3, 6, d)) == d);
      auto th = standard_theta(3);
      CHECK(igusa_J(unit() * Rat(2) - wedge(th, th) * Rat(d)) == 16 * d * d * d);
    }
    for (long k = 1; k <= 10; ++k) CHECK(igusa_J(unit() - pt(k)) == rat(-k * k, 4));
    CHECK(igusa_J(unit()) == 0);
    CHECK(igusa_J(pt()) == 0);
  }

  TEST_CASE("minor terms match brute-force Pfaffians") {
    std::mt19937_64 rng(32);
    auto c = igusa_coords(random_even(rng));
    auto terms = igusa_minor_terms(c);
    CHECK(terms.size() == 15);
    for (const auto& [ij, v] : terms) {
      auto [i, j] = ij;
      CHECK(v == oracle::pfaffian(cross_out(c.x, i, j)) * oracle::pfaffian(cross_out(c.y, i, j)));
    }
  }

  TEST_CASE("J is homogeneous of degree four") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 10; ++k) {
      auto w = random_even(rng);
      Rat lam = oracle::rand_rat(rng, 1, 4) / 3;
      Rat l2 = lam * lam;
      CHECK(igusa_J(w * lam) == l2 * l2 * igusa_J(w));
    }
  }

  TEST_CASE("J is Spin-invariant on samples") {
    std::mt19937_64 rng(34);
    LatticeV L{3};
    auto h = [&](int i, int j, int sign) {
      auto x = L.unit<Rat>(L.e(i));
      x[L.f(j)] = sign;
      return x;
    };
    std::vector<SpinElement<Rat>> gs;
    gs.push_back(spin_from_pair(L, h(1, 1, 1), h(2, 2, 1)));
    gs.push_back(spin_from_pair(L, h(3, 3, -1), h(5, 5, -1)));
    gs.push_back(spin_exp_even_nilpotent(CliffordElement<Rat>::word(3, mask_from_indices({1, 3}))));
    gs.push_back(spin_exp_even_nilpotent(CliffordElement<Rat>::word(3, (1u << 7) | (1u << 10), Rat(2))));
    for (int k = 0; k < 5; ++k) {
      auto w = random_even(rng);
      Rat J = igusa_J(w);
      for (const auto& g : gs) CHECK(igusa_J(m_action(g.element(), w)) == J);
    }
  }
}
