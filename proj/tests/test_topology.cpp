#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "palab/palab.hpp"

using namespace palab;

TEST_CASE("is_topology") {
  CHECK(is_topology({0u, 3u}, 2));            // indiscrete
  CHECK_FALSE(is_topology({0u, 1u, 2u}, 2));  // missing the full set
  CHECK(is_topology({0u, 2u, 3u}, 2));        // Sierpinski
  CHECK_FALSE(is_topology({3u}, 2));          // missing the empty set
  // not closed under intersection: {0,1} and {1,2} without {1}
  CHECK_FALSE(is_topology({0u, 0b011u, 0b110u, 0b111u}, 3));
}

TEST_CASE("topology enumeration counts and the raw-family oracle") {
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);

  // independent raw check: every family of subsets, filtered by the axioms
  CHECK(oracle::count_topologies_raw(1) == 1);
  CHECK(oracle::count_topologies_raw(2) == 4);
  CHECK(oracle::count_topologies_raw(3) == 29);

  Limits caps;
  CHECK_THROWS_AS(enumerate_topologies(9, caps), cap_error);

  SECTION("raisable cap: 6942 topologies on five points") {
    Limits five;
    five.topology_s_max = 5;
    CHECK(enumerate_topologies(5, five, 4).size() == 6942);
  }
}

TEST_CASE("specialization round-trip") {
  for (int s = 1; s <= 3; ++s)
    for (const auto& T : enumerate_topologies(s)) {
      auto U = specialization_preorder(T);
      CHECK(topology_from_preorder(U, s) == T);
    }
}

TEST_CASE("continuity through minimal-neighborhood boxes") {
  auto E45 = fixtures::e45();
  auto G2 = fixtures::g2();
  auto L3 = fixtures::l3();

  SECTION("extreme topologies accept everything") {
    for (const auto& T : {discrete_topology(2), indiscrete_topology(2)}) {
      CHECK(is_continuous(E45.theta, T));
      CHECK(is_continuous(E45.alphas[1], T));
      CHECK(is_continuous(G2.theta, T));
    }
  }

  SECTION("alpha_2 of E45 is not continuous for the Sierpinski topology") {
    CHECK_FALSE(is_continuous(E45.alphas[1], sierpinski_topology()));
    CHECK_FALSE(oracle::continuous_preimage(E45.alphas[1], sierpinski_topology()));
  }

  SECTION("constant tables are always continuous") {
    OperationTable c{2, 2, {1, 1, 1, 1}};
    for (const auto& T : enumerate_topologies(2)) CHECK(is_continuous(c, T));
  }

  SECTION("agreement with the raw preimage oracle") {
    for (const auto& T : enumerate_topologies(2)) {
      CHECK(is_continuous(E45.theta, T) == oracle::continuous_preimage(E45.theta, T));
      CHECK(is_continuous(E45.alphas[1], T) == oracle::continuous_preimage(E45.alphas[1], T));
      CHECK(is_continuous(G2.theta, T) == oracle::continuous_preimage(G2.theta, T));
    }
    for (const auto& T : enumerate_topologies(3)) {
      CHECK(is_continuous(L3.theta, T) == oracle::continuous_preimage(L3.theta, T));
      CHECK(is_continuous(L3.alphas[0], T) == oracle::continuous_preimage(L3.alphas[0], T));
    }
  }

  CHECK_THROWS_AS(is_continuous(E45.theta, discrete_topology(3)), input_error);
}

TEST_CASE("compatible topologies") {
  auto E45 = fixtures::e45();
  auto compat = compatible_topologies(E45);
  REQUIRE(compat.size() == 2);
  // sorted by opens: discrete first, indiscrete second
  CHECK(compat[0] == discrete_topology(2));
  CHECK(compat[1] == indiscrete_topology(2));

  CHECK(compatible_topologies(fixtures::one(1)).size() == 1);

  SECTION("discrete and indiscrete are always compatible") {
    for (const auto& A : {fixtures::e45(), fixtures::g2(), fixtures::l3()}) {
      CHECK(is_compatible(A, discrete_topology(A.s)));
      CHECK(is_compatible(A, indiscrete_topology(A.s)));
    }
  }

  SECTION("Sierpinski is not compatible with E45") {
    CHECK_FALSE(is_compatible(E45, sierpinski_topology()));
  }
}

TEST_CASE("separation axioms") {
  SECTION("Sierpinski") {
    auto ax = sep_axioms(sierpinski_topology());
    CHECK(ax.t0);
    CHECK_FALSE(ax.t1);
    CHECK_FALSE(ax.t2);
    CHECK_FALSE(ax.regular);
    CHECK_FALSE(ax.completely_regular);
  }

  SECTION("discrete") {
    for (int s : {1, 2, 3, 4}) {
      auto ax = sep_axioms(discrete_topology(s));
      CHECK((ax.t0 && ax.t1 && ax.t2 && ax.regular && ax.completely_regular));
    }
  }

  SECTION("partition topology on three points: clopen blocks, not T0") {
    auto T = make_topology({0u, 0b011u, 0b100u, 0b111u}, 3);
    auto ax = sep_axioms(T);
    CHECK_FALSE(ax.t0);
    CHECK(ax.completely_regular);
    CHECK(ax.regular);
  }

  SECTION("monotone chain over every topology on up to four points") {
    for (int s = 1; s <= 4; ++s)
      for (const auto& T : enumerate_topologies(s)) {
        auto ax = sep_axioms(T);
        if (ax.completely_regular) CHECK(ax.regular);
        if (ax.t2) CHECK(ax.t1);
        if (ax.t1) CHECK(ax.t0);
        if (ax.completely_regular && ax.t0) CHECK(ax.t1);
      }
  }
}

TEST_CASE("neighborhood base sets") {
  auto E45 = fixtures::e45();
  auto G2 = fixtures::g2();
  auto D2 = discrete_topology(2);

  CHECK(neighborhood_base_sets(E45, D2, 0, NeighborhoodTuple{{0b01u, 0b10u}}) == 0b01u);
  CHECK(neighborhood_base_sets(E45, D2, 0, NeighborhoodTuple{{0b11u, 0b11u}}) == 0b11u);
  CHECK(neighborhood_base_sets(G2, D2, 1, NeighborhoodTuple{{0b01u}}) == 0b10u);

  // H_i must be open and contain e_i
  CHECK_THROWS_AS(neighborhood_base_sets(E45, indiscrete_topology(2), 0,
                                         NeighborhoodTuple{{0b01u, 0b10u}}),
                  input_error);
  CHECK_THROWS_AS(neighborhood_base_sets(E45, D2, 0, NeighborhoodTuple{{0b10u, 0b10u}}),
                  input_error);
}

TEST_CASE("neighborhood base property") {
  auto E45 = fixtures::e45();
  CHECK(check_prop_2_2(E45, discrete_topology(2)).holds);
  CHECK(check_prop_2_2(E45, indiscrete_topology(2)).holds);
  CHECK(check_prop_2_2(fixtures::g2(), discrete_topology(2)).holds);
  CHECK(check_prop_2_2(fixtures::l3(), discrete_topology(3)).holds);
  CHECK_THROWS_AS(check_prop_2_2(E45, sierpinski_topology()), precondition_error);
}

TEST_CASE("T0 forces T1 and complete regularity on the fixtures") {
  auto E45 = fixtures::e45();
  auto r41 = check_lemma_4_1(E45);
  CHECK(r41.holds);
  CHECK(r41.detail == "compatible=2 t0=[0]");

  CHECK(check_lemma_4_1(fixtures::g2()).holds);
  CHECK(check_lemma_4_1(fixtures::l3()).holds);  // needs no cancellability

  CHECK(check_theorem_4_2(E45).holds);
  CHECK(check_theorem_4_2(fixtures::g2()).holds);
  CHECK(check_theorem_4_2(power(E45, 2)).holds);
  CHECK_THROWS_AS(check_theorem_4_2(fixtures::l3()), precondition_error);
}
