#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "palab/palab.hpp"

using namespace palab;

TEST_CASE("eval uses first-argument-most-significant indexing") {
  auto E45 = fixtures::e45();
  auto G2 = fixtures::g2();
  CHECK(eval(E45.theta, {0, 0, 0}) == 1);
  CHECK(eval(E45.theta, {0, 1, 1}) == 1);
  CHECK(eval(E45.theta, {1, 0, 0}) == 0);
  CHECK(eval(G2.theta, {1, 1}) == 0);

  CHECK_THROWS_AS(eval(G2.theta, {1}), input_error);
  CHECK_THROWS_AS(eval(G2.theta, {1, 2}), input_error);
}

TEST_CASE("make_algebra validates shapes and ranges") {
  CHECK_NOTHROW(fixtures::e45());

  // entry equal to s
  CHECK_THROWS_MATCHES(make_algebra(2, 1, {0, 1, 1, 2}, {{0, 1, 1, 0}}, {0}), input_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("theta")));
  // n = 0
  CHECK_THROWS_AS(make_algebra(2, 0, {0, 1, 1, 0}, {}, {}), input_error);
  // wrong alpha count
  CHECK_THROWS_MATCHES(make_algebra(2, 2, {1, 0, 0, 1, 0, 1, 1, 0}, {{0, 0, 0, 0}}, {0, 1}),
                       input_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("alphas")));
  // constant out of range
  CHECK_THROWS_MATCHES(make_algebra(2, 1, {0, 1, 1, 0}, {{0, 1, 1, 0}}, {2}), input_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("es")));
}

TEST_CASE("power builds componentwise operations") {
  auto E45 = fixtures::e45();
  auto G2 = fixtures::g2();

  SECTION("identity case k=1") {
    CHECK(power(G2, 1) == G2);
    CHECK(power(E45, 1) == E45);
  }

  SECTION("power(E45,2) acts componentwise") {
    auto P = power(E45, 2);
    REQUIRE(P.s == 4);
    REQUIRE(P.n == 2);
    // encode (x1,x2) as 2*x1 + x2; check theta on a few tuples against the
    // componentwise definition
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 4; ++z) {
          int lo = eval(E45.theta, {x & 1, y & 1, z & 1});
          int hi = eval(E45.theta, {x >> 1, y >> 1, z >> 1});
          CHECK(eval(P.theta, {x, y, z}) == 2 * hi + lo);
        }
  }

  SECTION("power(G2,2) is the Klein four-group") {
    auto K = power(G2, 2);
    CHECK(oracle::group_axioms(K));
    CHECK(check_group_collapse(K).holds);
    CHECK(check_group_collapse(K).detail == "group confirmed");
  }

  SECTION("caps") {
    Limits tight;
    tight.table_entry_max = 100;
    CHECK_THROWS_AS(power(E45, 3, tight), cap_error);  // 8^3 = 512 entries
  }
}

TEST_CASE("power element encoding round-trips") {
  auto E45 = fixtures::e45();
  for (int k = 1; k <= 3; ++k) {
    const int ps = 1 << k;
    for (int x = 0; x < ps; ++x) {
      std::vector<int> coords(k);
      decode_tuple(static_cast<std::uint64_t>(x), 2, k, coords);
      CHECK(static_cast<int>(encode_tuple(coords, 2)) == x);
    }
  }
}

TEST_CASE("congruence enumeration matches the partition-filter oracle") {
  auto E45 = fixtures::e45();
  auto G2 = fixtures::g2();
  auto L3 = fixtures::l3();
  auto P2 = power(E45, 2);

  for (const auto& A : {E45, G2, L3, P2}) {
    auto found = enumerate_congruences(A);
    std::vector<std::vector<int>> expected;
    for (const auto& p : oracle::all_partitions(A.s))
      if (oracle::compatible_full(A, p)) expected.push_back(p);
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].block_of == expected[i]);
  }
}

TEST_CASE("congruences of the named fixtures") {
  auto E45 = fixtures::e45();
  auto congruences = enumerate_congruences(E45);
  REQUIRE(congruences.size() == 2);
  CHECK(congruences[0].block_of == std::vector<int>{0, 0});  // one block
  CHECK(congruences[1].block_of == std::vector<int>{0, 1});  // identity

  CHECK(enumerate_congruences(fixtures::one(2)).size() == 1);
  CHECK(enumerate_congruences(power(E45, 2)).size() == 5);
  CHECK(enumerate_congruences(power(E45, 3)).size() == 16);

  // every returned partition passes the full-definition re-check
  for (const auto& R : enumerate_congruences(power(E45, 2)))
    CHECK(oracle::compatible_full(power(E45, 2), R.block_of));

  Limits tight;
  tight.congruence_s_max = 2;
  CHECK_THROWS_AS(enumerate_congruences(fixtures::l3(), tight), cap_error);
}

TEST_CASE("quotients") {
  auto E45 = fixtures::e45();

  SECTION("one-block quotient is the terminal algebra") {
    auto Q = quotient(E45, Congruence{{0, 0}});
    CHECK(Q.s == 1);
    CHECK(Q.n == 2);
    CHECK(Q == fixtures::one(2));
  }

  SECTION("identity quotient is the algebra itself up to relabeling") {
    auto Q = quotient(E45, Congruence{{0, 1}});
    CHECK(canonical_form(Q) == canonical_form(E45));
  }

  SECTION("non-congruences are rejected") {
    // {0}{1} vs {0,1} on G2 power: blocks of [0,1,1,0]-style junk
    auto P2 = power(E45, 2);
    Congruence bad{{0, 0, 1, 2}};
    REQUIRE_FALSE(is_congruence(P2, bad));
    CHECK_THROWS_AS(quotient(P2, bad), input_error);
    CHECK_THROWS_AS(quotient(E45, Congruence{{1, 0}}), input_error);  // not normalized
  }

  SECTION("quotients of the square keep the checked identities") {
    auto P2 = power(E45, 2);
    for (const auto& R : enumerate_congruences(P2)) {
      auto Q = quotient(P2, R);
      CHECK(check_protomodular(Q).holds);
      CHECK(check_rc_i(Q).holds);
    }
  }
}

TEST_CASE("identity transport to powers and quotients of E45") {
  auto E45 = fixtures::e45();
  for (int k = 1; k <= 3; ++k) {
    auto P = power(E45, k);
    CAPTURE(k);
    CHECK(check_protomodular(P).holds);
    CHECK(check_rc_i(P).holds);
    for (const auto& R : enumerate_congruences(P)) {
      auto Q = quotient(P, R);
      CHECK(check_protomodular(Q).holds);
      CHECK(check_rc_i(Q).holds);
    }
  }
}

TEST_CASE("canonical form is idempotent and orbit-constant") {
  auto E45 = fixtures::e45();
  auto G2 = fixtures::g2();
  auto L3 = fixtures::l3();

  for (const auto& A : {E45, G2, L3}) {
    auto c = canonical_form(A);
    CHECK(canonical_form(c) == c);
  }

  SECTION("swapping the carrier of G2 lands in the same orbit") {
    std::vector<int> swap01 = {1, 0};
    CHECK(canonical_form(relabel(G2, swap01)) == canonical_form(G2));
  }

  SECTION("random relabelings of L3 and E45") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
      for (const auto& A : {E45, L3}) {
        std::vector<int> perm(A.s);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(A, perm)) == canonical_form(A));
      }
    }
  }

  SECTION("E45 and its first power share the canonical form") {
    CHECK(canonical_form(power(E45, 1)) == canonical_form(E45));
  }
}
