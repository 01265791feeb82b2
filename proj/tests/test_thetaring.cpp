#include "doctest.h"
#include "spinweil/igusa.hpp"
#include "spinweil/serialize.hpp"
#include "spinweil/spinors.hpp"
#include "spinweil/thetaring.hpp"

using namespace spinweil;

namespace {

ThetaPoly poly(int n, std::vector<Rat> c) {
  std::vector<QuadExt> q;
  for (auto& x : c) q.emplace_back(x);
  q.resize(static_cast<std::size_t>(n) + 1, QuadExt(0));
  return ThetaPoly(n, q);
}

QuadExt q(long v) { return QuadExt(v); }

}  // namespace

TEST_SUITE("thetaring") {
  TEST_CASE("ring basics") {
    auto t = ThetaPoly::theta(3);
    CHECK(t * t * t * t == ThetaPoly::constant(3, q(0)));
    CHECK(ThetaPoly::point(3) == poly(3, {0, 0, 0, rat(1, 6)}));
    CHECK(tintegral(ThetaPoly::point(3)) == q(1));
    CHECK(ttau(t) == t * q(-1));
    CHECK(ThetaPoly(3, {q(1)}) == ThetaPoly::constant(3, q(1)));
    CHECK_THROWS(ThetaPoly(1, {q(1), q(0), q(2)}));
    CHECK_THROWS(t + ThetaPoly::theta(2));
  }

  TEST_CASE("truncated exponential") {
    CHECK(texp(q(0), 3) == ThetaPoly::constant(3, q(1)));
    for (long d : {1L, 2L, 5L}) {
      QuadExt w = QuadExt::omega(d);
      std::vector<QuadExt> c = {q(1), w, QuadExt(rat(-d, 2)), w * QuadExt(rat(-d, 6))};
      CHECK(texp(w, 3) == ThetaPoly(3, c));
      // -d sqrt(-d) [pt]
      CHECK(texp(w, 3)[3] * QuadExt(6) == -QuadExt(d) * w);
    }
    for (int n = 1; n <= 8; ++n)
      for (long a = -2; a <= 3; ++a) {
        CHECK(texp(q(a), n) * texp(q(2), n) == texp(q(a + 2), n));
        QuadExt p = q(1);
        for (int k = 0; k < n; ++k) p *= q(a);
        CHECK(tintegral(texp(q(a), n)) == p);
      }
  }

  TEST_CASE("Chern character of the secant ideal") {
    CHECK(ch_secant_ideal_threefold(1) == poly(3, {1, 1, rat(-1, 2), rat(-1, 6)}));
    auto c4 = ch_secant_ideal_threefold(4);
    CHECK(c4 == ThetaPoly::constant(3, q(1)) + ThetaPoly::theta(3) - ThetaPoly::theta(3) * ThetaPoly::theta(3) * q(2) -
                    ThetaPoly::point(3) * q(4));
    for (long d = 1; d <= 6; ++d) {
      auto [a, b] = alpha_beta(3, d, 0, 1, 1);
      CHECK(ch_secant_ideal_threefold(d) == a + b);
    }
  }

  TEST_CASE("alpha and beta") {
    auto [a, b] = alpha_beta(3, 2, 0, 1, 1);
    CHECK(a == poly(3, {1, 0, -1, 0}));
    CHECK(b == ThetaPoly::theta(3) - ThetaPoly::point(3) * q(2));
    for (int k : {1, 3}) CHECK(a[k] == q(0));
    for (int k : {0, 2}) CHECK(b[k] == q(0));
    struct P {
      int n;
      long d, rho, tau, qq;
    };
    for (auto p : {P{4, 3, 1, 1, 2}, P{3, 2, -1, 2, 3}, P{2, 5, 0, 1, 1}}) {
      auto [al, be] = alpha_beta(p.n, p.d, p.rho, p.tau, p.qq);
      QuadExt k = (QuadExt(p.rho) + QuadExt::omega(p.d) * QuadExt(p.tau)) * QuadExt(rat(1, p.qq));
      QuadExt qn = q(1);
      for (int i = 0; i < p.n; ++i) qn *= q(p.qq);
      CHECK(texp(k, p.n) * qn == al + be * (QuadExt::omega(p.d) * QuadExt(p.tau)));
      CHECK(al.is_rational());
      CHECK(be.is_rational());
    }
  }

  TEST_CASE("Euler pairing") {
    auto [a2, b2] = alpha_beta(2, 2, 0, 1, 1);
    auto v = a2 + b2;
    CHECK(euler_pairing(v, v) == q(-6));
    for (long d = 1; d <= 4; ++d) {
      auto [a3, b3] = alpha_beta(3, d, 1, 1, 2);
      auto w = a3 * q(2) + b3 * q(-3);
      CHECK(euler_pairing(w, w) == q(0));
      auto [a4, b4] = alpha_beta(4, d, 0, 1, 1);
      CHECK(euler_pairing(b4, b4) == q(8 * d));
    }
    CHECK_THROWS(euler_pairing(ThetaPoly::theta(2), ThetaPoly::theta(3)));
  }

  TEST_CASE("genus-4 coefficients") {
    for (long d = 1; d <= 10; ++d) {
      auto c = solve_genus4_coeffs(d, 1);
      CHECK(c.a2 == d + 1);
      CHECK(c.a1 == 0);
      CHECK(c.a0 == 2 * d * (d + 1));
      for (long a3 = -3; a3 <= 1; ++a3) {
        auto g = solve_genus4_coeffs(d, a3);
        long s = d + a3 * a3;
        CHECK(g.a2 == s);
        CHECK(g.a1 == 2 * s * (1 - a3));
        CHECK(g.a0 == s * (6 * a3 * a3 - 6 * a3 + 2 * d));
      }
    }
    auto c = solve_genus4_coeffs(1, 0);
    CHECK(c.a2 == 1);
    CHECK(c.a1 == 2);
    CHECK(c.a0 == 2);
    CHECK(ch_structure_sheaf_W(0) == ThetaPoly::point(4));
    CHECK_THROWS_AS(ch_structure_sheaf_W(3), std::invalid_argument);
  }

  TEST_CASE("embedding into the spinor space") {
    auto t2 = ThetaPoly::theta(3) * ThetaPoly::theta(3);
    auto e = embed_theta_rational(t2);
    auto c = igusa_coords(e);
    for (auto [i, j] : {std::pair{3, 6}, {2, 5}, {1, 4}}) CHECK(c.y(i - 1, j - 1) == -2);
    CHECK(embed_theta_rational(ThetaPoly::point(3)) == GradedElement<Rat>::monomial(basis_S(3), full_mask(6)));
    for (long d = 1; d <= 4; ++d) CHECK(igusa_J(embed_theta_rational(poly(3, {2, 0, Rat(-d), 0}))) == 16 * d * d * d);
    CHECK_THROWS(embed_theta_into_spinor(ThetaPoly::theta(4)));
  }

  TEST_CASE("two integration models agree") {
    for (int n = 1; n <= 3; ++n)
      for (long d = 1; d <= 3; ++d) {
        auto [a, b] = alpha_beta(n, d, 1, 1, 1);
        auto v = a + b * q(2), w = a * q(3) - b;
        CHECK(mukai_pairing(embed_theta_into_spinor(v), embed_theta_into_spinor(w)) == euler_pairing(v, w));
        CHECK(integral_X(embed_theta_into_spinor(v)) == tintegral(v));
      }
  }

  TEST_CASE("alpha + beta lies on the secant") {
    for (long d = 1; d <= 4; ++d) {
      auto [a, b] = alpha_beta(3, d, 0, 1, 1);
      auto s = standard_secant(3, d);
      auto x = embed_theta_into_spinor(a + b);
      auto l1 = s.ell1, l2 = s.ell2;
      // x in span{l1, l2}: rank of three vectors is 2
      std::vector<Vec<QuadExt>> rows;
      for (const auto* g : {&x, &l1, &l2}) {
        Vec<QuadExt> v(64, QuadExt(0));
        for (const auto& [m, c] : g->terms()) v[m] = reembed(c, d);
        rows.push_back(v);
      }
      CHECK(Subspace<QuadExt>::span(rows, 64).dim() == 2);
    }
  }

  TEST_CASE("ThetaPoly JSON") {
    auto p = texp(QuadExt::omega(3), 3);
    CHECK(theta_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(theta_from_json(Json{{"n", 3}}), InputError);
  }
}
