#include "doctest.h"
#include "oracles.hpp"
#include "spinweil/scalars.hpp"
#include "spinweil/serialize.hpp"

using namespace spinweil;

TEST_SUITE("scalars") {
  TEST_CASE("rationals are kept in lowest terms") {
    CHECK(rat(-4, 4) == Rat(-1));
    CHECK(rat(6, -4).get_den() == 2);
    CHECK(to_string(rat(3, 6)) == "1/2");
    CHECK(rat_from_string("10/4") == rat(5, 2));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("abc"));
  }

  TEST_CASE("conjugation examples") {
    CHECK(quad_conj(QuadExt(3, 1, 1)) == QuadExt(3, 1, -1));
    CHECK(quad_conj(QuadExt(1, 0, 0)) == QuadExt(1, 0, 0));
    CHECK(quad_conj(QuadExt(5, 2, -3)) == QuadExt(5, 2, 3));
  }

  TEST_CASE("norm examples") {
    CHECK(quad_norm(QuadExt(3, 1, 1)) == 4);
    CHECK(quad_norm(QuadExt::omega(1)) == 1);
    CHECK(quad_norm(QuadExt(2, 3, 0)) == 9);
  }

  TEST_CASE("omega squares to -d") {
    for (long d : {1, 2, 3, 7, 12}) CHECK(QuadExt::omega(d) * QuadExt::omega(d) == QuadExt(d, -d, 0));
  }

  TEST_CASE("norm is multiplicative, conjugation an involution, inverses exact") {
    std::mt19937_64 rng(11);
    for (long d : {1, 2, 3, 5, 6}) {
      for (int k = 0; k < 40; ++k) {
        QuadExt z(d, oracle::rand_rat(rng), oracle::rand_rat(rng));
        QuadExt w(d, oracle::rand_rat(rng), oracle::rand_rat(rng));
        CHECK(quad_norm(z * w) == quad_norm(z) * quad_norm(w));
        CHECK(quad_conj(quad_conj(z)) == z);
        CHECK((quad_conj(z) == z) == z.is_rational());
        if (!is_zero(z)) {
          CHECK((z * w) * z.inverse() == w);
          CHECK(z / z == QuadExt(1));
        }
      }
    }
  }

  TEST_CASE("values from different fields never combine") {
    CHECK_THROWS_AS(QuadExt::omega(2) + QuadExt::omega(3), std::domain_error);
    CHECK_THROWS_AS(QuadExt::omega(2) * QuadExt::omega(3), std::domain_error);
    // rational constants adopt the field of their partner
    QuadExt z = QuadExt(2) + QuadExt::omega(5);
    CHECK(z.d() == 5);
    CHECK_THROWS(QuadExt(-1, 0, 1));
    CHECK_THROWS_AS(QuadExt(3, 0, 0).inverse(), std::domain_error);
  }

  TEST_CASE("square-free part and re-embedding") {
    CHECK(square_free_part(12) == std::pair<long, long>{3, 2});
    CHECK(square_free_part(1) == std::pair<long, long>{1, 1});
    CHECK(square_free_part(50) == std::pair<long, long>{2, 5});
    // sqrt(-12) = 2 sqrt(-3)
    CHECK(reembed(QuadExt::omega(12), 3) == QuadExt(3, 0, 2));
    CHECK_THROWS(reembed(QuadExt::omega(2), 3));
  }

  TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
      Rat r = oracle::rand_rat(rng) / Rat(1 + k);
      r.canonicalize();
      CHECK(rat_from_json(to_json(r)) == r);
      QuadExt z(1 + k % 4, r, oracle::rand_rat(rng));
      CHECK(quad_from_json(to_json(z)) == z);
    }
    CHECK(to_json(rat(-3, 6)) == Json{{"num", "-1"}, {"den", "2"}});
    CHECK(rat_from_json(Json("7/3")) == rat(7, 3));
    CHECK(rat_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rat_from_json(Json{{"num", "1"}, {"den", "0"}}), InputError);
    CHECK_THROWS_AS(rat_from_json(Json::array()), InputError);
  }
}
