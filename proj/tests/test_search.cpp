#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "palab/palab.hpp"

using namespace palab;

TEST_CASE("search at s=2 n=1 finds the two group structures") {
  SearchSpec spec{2, 1, {Filter::protomodular}, false};
  auto result = search(spec);
  REQUIRE(result.algebras.size() == 2);
  CHECK(result.summary.candidates == 2);

  // e=0 and e=1 variants of XOR, both groups
  CHECK(result.algebras[0].theta.entries == std::vector<int>{0, 1, 1, 0});
  CHECK(result.algebras[0].es == std::vector<int>{0});
  CHECK(result.algebras[1].theta.entries == std::vector<int>{1, 0, 0, 1});
  CHECK(result.algebras[1].es == std::vector<int>{1});
  for (const auto& A : result.algebras) {
    CHECK(oracle::group_axioms(A));
    CHECK(check_rc_i(A).holds);
  }

  SECTION("completeness against the raw (theta, alpha, e) enumeration") {
    auto raw = oracle::raw_protomodular_enum(2, 1);
    REQUIRE(raw.size() == 2);
    CHECK(raw == result.algebras);
  }
}

TEST_CASE("search at s=3 n=1 against the semi-raw oracle") {
  SearchSpec spec{3, 1, {}, false};
  auto result = search(spec);
  CHECK(result.algebras.size() == 24);  // 3 * (2!)^3 column choices

  auto semiraw = oracle::semiraw_protomodular_n1(3);
  CHECK(semiraw == result.algebras);

  SECTION("canonical forms, L3 membership, and an rc_i failure") {
    SearchSpec dedup{3, 1, {}, true};
    auto canon = search(dedup);
    CHECK(canon.algebras.size() == 6);
    auto l3c = canonical_form(fixtures::l3());
    CHECK(std::find(canon.algebras.begin(), canon.algebras.end(), l3c) != canon.algebras.end());
    bool some_rc_failure = false;
    for (const auto& A : canon.algebras) some_rc_failure |= !check_rc_i(A).holds;
    CHECK(some_rc_failure);
    for (const auto& A : canon.algebras) {
      CHECK(A == canonical_form(A));
      CHECK(is_protomodular(A));
    }
  }
}

TEST_CASE("search at s=2 n=2") {
  SearchSpec spec{2, 2, {Filter::protomodular}, false};
  auto result = search(spec);
  // golden count, recorded from the first run of the two independent
  // enumeration strategies below
  CHECK(result.algebras.size() == 576);

  SECTION("raw enumeration strategy produces the same set") {
    auto raw = oracle::raw_protomodular_enum(2, 2);
    REQUIRE(raw.size() == result.algebras.size());
    CHECK(raw == result.algebras);
  }

  SECTION("the right-cancellable canonical forms include E45") {
    SearchSpec rc{2, 2, {Filter::protomodular, Filter::rc_i}, true};
    auto canon = search(rc);
    CHECK(canon.algebras.size() == 24);  // golden
    auto e45c = canonical_form(fixtures::e45());
    CHECK(std::find(canon.algebras.begin(), canon.algebras.end(), e45c) != canon.algebras.end());
  }
}

TEST_CASE("filter monotonicity") {
  for (auto [s, n] : {std::pair{3, 1}, std::pair{2, 2}}) {
    SearchSpec loose{s, n, {Filter::protomodular}, false};
    SearchSpec strict{s, n, {Filter::protomodular, Filter::rc_i}, false};
    auto all = search(loose).algebras;
    auto rc = search(strict).algebras;
    CHECK(rc.size() <= all.size());
    for (const auto& A : rc) {
      CHECK(std::find(all.begin(), all.end(), A) != all.end());
      CHECK(check_rc_i(A).holds);
    }
  }
}

TEST_CASE("rc_i hits satisfy the remaining cancellability conditions") {
  SearchSpec spec{2, 1, {Filter::rc_i}, false};
  for (const auto& A : search(spec).algebras) {
    CHECK(check_rc_ii(A).holds);
    CHECK(check_rc_iii(A).holds);
    CHECK(check_rc_iv_semantic(A).holds);
    CHECK(check_rc_v(A).holds);
  }
}

TEST_CASE("search caps and argument validation") {
  Limits limits;
  CHECK_THROWS_AS(search(SearchSpec{3, 2, {}, false}, limits), cap_error);  // 3^27 candidates
  CHECK_THROWS_AS(search(SearchSpec{2, 2, {Filter::right_identity_3_8}, false}, limits),
                  input_error);
  CHECK_THROWS_AS(search(SearchSpec{0, 1, {}, false}, limits), input_error);
}

TEST_CASE("classification tables") {
  SECTION("s=2 n=1: two structures, all cancellable groups") {
    auto result = classify(SearchSpec{2, 1, {}, false});
    REQUIRE(result.rows.size() == 1);
    const auto& row = result.rows[0];
    CHECK(row.rc_i);
    CHECK(row.two_associative);
    CHECK(row.right_identity_3_8 == true);
    CHECK(row.group == true);
    CHECK(row.count == 2);
  }

  SECTION("s=1 n=1: the one-element structure satisfies everything") {
    auto result = classify(SearchSpec{1, 1, {}, false});
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].count == 1);
    CHECK(result.rows[0].rc_i);
    CHECK(result.rows[0].group == true);
  }

  SECTION("s=3 n=1: cancellability plus right identity forces a group") {
    auto result = classify(SearchSpec{3, 1, {}, false});
    std::uint64_t total = 0;
    for (const auto& row : result.rows) {
      total += row.count;
      if (row.rc_i && row.right_identity_3_8 == true) CHECK(row.group == true);
    }
    CHECK(total == 24);
  }
}

TEST_CASE("predicate flags match the checker reports") {
  for (const auto& A : search(SearchSpec{3, 1, {}, true}).algebras) {
    auto f = predicate_flags(A);
    CHECK(f.protomodular == is_protomodular(A));
    CHECK(f.rc_i == check_rc_i(A).holds);
    CHECK(f.two_associative == check_2_associative(A).holds);
    REQUIRE(f.group.has_value());
    CHECK(*f.group == oracle::group_axioms(A));
  }
}

TEST_CASE("example stage pipeline on the base fixture") {
  std::vector<CheckReport> reports;
  example45_stage(reports, "E45", fixtures::e45(), Limits{}, 1);
  REQUIRE(reports.size() == 7);
  CHECK(reports[0].check == "E45/protomodular");
  CHECK(reports[1].check == "E45/rc-i");
  CHECK(reports[2].check == "E45/lemma31");
  CHECK(reports[3].check == "E45/lemma41");
  CHECK(reports[4].check == "E45/theorem42");
  CHECK(reports[5].check == "E45/T0/c-conditions");
  CHECK(reports[6].check == "E45/T0/lemma44");
  for (const auto& r : reports) CHECK(r.holds);
}
