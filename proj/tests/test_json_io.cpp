#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "palab/palab.hpp"

using namespace palab;

#ifndef PALAB_DATA_DIR
#define PALAB_DATA_DIR "."
#endif

static std::string data_path(const std::string& name) {
  return std::string(PALAB_DATA_DIR) + "/" + name;
}

TEST_CASE("algebra files round-trip") {
  auto E45 = fixtures::e45();
  json j = algebra_to_json(E45);
  CHECK(j.dump() ==
        R"({"alphas":[[0,0,0,0],[1,0,0,1]],"es":[0,1],"n":2,"s":2,"theta":[1,0,0,1,0,1,1,0]})");
  CHECK(algebra_from_json(j) == E45);

  CHECK_THROWS_AS(algebra_from_json(json::parse("{}")), input_error);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"s":2,"n":0,"theta":[],"alphas":[],"es":[]})")),
                  input_error);
  json bad = j;
  bad["theta"][0] = 2;
  CHECK_THROWS_AS(algebra_from_json(bad), input_error);
}

TEST_CASE("checked-in fixture files match the in-code fixtures") {
  CHECK(load_algebra(data_path("E45.json")) == fixtures::e45());
  CHECK(load_algebra(data_path("G2.json")) == fixtures::g2());
  CHECK(load_algebra(data_path("L3.json")) == fixtures::l3());
  CHECK(load_algebra(data_path("Z9.json")) == fixtures::cyclic_group(9));
  CHECK(load_topology(data_path("disc2.json")) == discrete_topology(2));
  CHECK(load_topology(data_path("indisc2.json")) == indiscrete_topology(2));
  CHECK(load_topology(data_path("sierp.json")) == sierpinski_topology());
  CHECK(load_topology(data_path("disc3.json")) == discrete_topology(3));
  CHECK_THROWS_AS(load_algebra(data_path("garbage.json")), input_error);
  CHECK_THROWS_AS(load_algebra(data_path("no_such_file.json")), input_error);
}

TEST_CASE("topology files sort opens lexicographically as element arrays") {
  json j = topology_to_json(discrete_topology(2));
  CHECK(j.dump() == R"({"opens":[[],[0],[0,1],[1]],"s":2})");
  CHECK(topology_from_json(j) == discrete_topology(2));

  // mask order and array-lexicographic order differ: {2} vs {0,1}
  FiniteTopology T = make_topology({0u, 0b011u, 0b100u, 0b111u}, 3);
  json jt = topology_to_json(T);
  CHECK(jt["opens"].dump() == R"([[],[0,1],[0,1,2],[2]])");
  CHECK(topology_from_json(jt) == T);

  CHECK_THROWS_AS(topology_from_json(json::parse(R"({"s":2,"opens":[[0],[0,1]]})")), input_error);
  CHECK_THROWS_AS(topology_from_json(json::parse(R"({"s":2,"opens":[[],[2],[0,1]]})")),
                  input_error);
}

TEST_CASE("congruence files") {
  Congruence R{{0, 1, 0}};
  json j = congruence_to_json(R);
  CHECK(j.dump() == R"({"block_of":[0,1,0]})");
  CHECK(congruence_from_json(j) == R);
  CHECK_THROWS_AS(congruence_from_json(json::parse(R"({"block_of":[1,0]})")), input_error);
  CHECK_THROWS_AS(congruence_from_json(json::parse(R"({"blocks":[0]})")), input_error);
}

TEST_CASE("covering and relation serialization") {
  Covering C = make_covering(2, {0b01u, 0b10u});
  json j = covering_to_json(C);
  CHECK(j.dump() == R"({"blocks":[[0],[1]],"s":2})");
  CHECK(covering_from_json(j) == C);

  Relation R = entourage(C);
  CHECK(relation_to_json(R).dump() == "[1,2]");
}

TEST_CASE("report serialization") {
  auto r = check_rc_i(fixtures::l3());
  json j = report_to_json(r);
  CHECK(j.dump() ==
        R"json({"check":"rc-i","counterexample":{"i":1,"identity":"(3.1)","lhs":1,"rhs":2,"tuple":[0,1,0,2]},"holds":false})json");

  auto ok = check_rc_i(fixtures::g2());
  CHECK(report_to_json(ok).dump() == R"({"check":"rc-i","counterexample":null,"holds":true})");
}

TEST_CASE("catalog lines carry predicate flags") {
  auto G2 = fixtures::g2();
  json line = catalog_line(G2, predicate_flags(G2));
  CHECK(line["protomodular"] == true);
  CHECK(line["rc_i"] == true);
  CHECK(line["two_associative"] == true);
  CHECK(line["right_identity_3_8"] == true);
  CHECK(line["group"] == true);
  CHECK(algebra_from_json(line) == G2);  // extra keys do not disturb parsing

  json line2 = catalog_line(fixtures::e45(), predicate_flags(fixtures::e45()));
  CHECK(line2["right_identity_3_8"].is_null());
  CHECK(line2["group"].is_null());
}
