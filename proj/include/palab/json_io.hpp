#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "palab/search.hpp"

namespace palab {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Algebra files: {"s": int, "n": int, "theta": [...], "alphas": [[...],...],
// "es": [...]} with tables flattened first-argument-most-significant.
// ---------------------------------------------------------------------------

inline json algebra_to_json(const FiniteAlgebra& A) {
  json j;
  j["s"] = A.s;
  j["n"] = A.n;
  j["theta"] = A.theta.entries;
  json alphas = json::array();
  for (const auto& a : A.alphas) alphas.push_back(a.entries);
  j["alphas"] = std::move(alphas);
  j["es"] = A.es;
  return j;
}

inline FiniteAlgebra algebra_from_json(const json& j, const Limits& limits = {}) {
  try {
    int s = j.at("s").get<int>();
    int n = j.at("n").get<int>();
    std::vector<int> theta = j.at("theta").get<std::vector<int>>();
    std::vector<std::vector<int>> alphas = j.at("alphas").get<std::vector<std::vector<int>>>();
    std::vector<int> es = j.at("es").get<std::vector<int>>();
    return make_algebra(s, n, std::move(theta), std::move(alphas), std::move(es), limits);
  } catch (const json::exception& e) {
    throw input_error(std::string("algebra json: ") + e.what());
  }
}

inline json congruence_to_json(const Congruence& R) { return json{{"block_of", R.block_of}}; }

inline Congruence congruence_from_json(const json& j) {
  try {
    Congruence R{j.at("block_of").get<std::vector<int>>()};
    if (normalize_partition(R.block_of) != R)
      throw input_error("congruence json: block ids must be normalized by first occurrence");
    return R;
  } catch (const json::exception& e) {
    throw input_error(std::string("congruence json: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Topology and covering files store subsets as sorted element arrays, the
// outer lists sorted lexicographically.
// ---------------------------------------------------------------------------

inline std::vector<int> mask_to_elements(std::uint32_t m) {
  std::vector<int> out;
  for (int x = 0; x < 32; ++x)
    if (m & (1u << x)) out.push_back(x);
  return out;
}

inline std::uint32_t elements_to_mask(const std::vector<int>& elems, int s) {
  std::uint32_t m = 0;
  for (int x : elems) {
    if (x < 0 || x >= s)
      throw input_error("subset element " + std::to_string(x) + " out of range [0," +
                        std::to_string(s) + ")");
    m |= 1u << x;
  }
  return m;
}

inline json subsets_to_json(const std::vector<std::uint32_t>& masks) {
  std::vector<std::vector<int>> arrays;
  for (std::uint32_t m : masks) arrays.push_back(mask_to_elements(m));
  std::sort(arrays.begin(), arrays.end());
  return json(arrays);
}

inline json topology_to_json(const FiniteTopology& T) {
  json j;
  j["s"] = T.s;
  j["opens"] = subsets_to_json(T.opens);
  return j;
}

inline FiniteTopology topology_from_json(const json& j) {
  try {
    int s = j.at("s").get<int>();
    auto arrays = j.at("opens").get<std::vector<std::vector<int>>>();
    std::vector<std::uint32_t> opens;
    for (const auto& a : arrays) opens.push_back(elements_to_mask(a, s));
    return make_topology(std::move(opens), s);
  } catch (const json::exception& e) {
    throw input_error(std::string("topology json: ") + e.what());
  }
}

inline json covering_to_json(const Covering& C) {
  json j;
  j["s"] = C.s;
  j["blocks"] = subsets_to_json(C.blocks);
  return j;
}

inline Covering covering_from_json(const json& j) {
  try {
    int s = j.at("s").get<int>();
    auto arrays = j.at("blocks").get<std::vector<std::vector<int>>>();
    std::vector<std::uint32_t> blocks;
    for (const auto& a : arrays) blocks.push_back(elements_to_mask(a, s));
    return make_covering(s, std::move(blocks));
  } catch (const json::exception& e) {
    throw input_error(std::string("covering json: ") + e.what());
  }
}

// Relations serialize as arrays of row bitmasks.
inline json relation_to_json(const Relation& R) { return json(R.rows); }

// ---------------------------------------------------------------------------
// Reports: {"check": str, "holds": bool, "counterexample": {...}|null},
// plus "detail" when a note is attached.
// ---------------------------------------------------------------------------

inline json report_to_json(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  j["holds"] = r.holds;
  if (r.counterexample) {
    json ce;
    ce["identity"] = r.counterexample->identity;
    if (r.counterexample->i) ce["i"] = *r.counterexample->i;
    ce["tuple"] = r.counterexample->tuple;
    if (r.counterexample->lhs) ce["lhs"] = *r.counterexample->lhs;
    if (r.counterexample->rhs) ce["rhs"] = *r.counterexample->rhs;
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline json reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

// Catalog line: the algebra file fields plus predicate flags.
inline json catalog_line(const FiniteAlgebra& A, const PredicateFlags& f) {
  json j = algebra_to_json(A);
  j["protomodular"] = f.protomodular;
  j["rc_i"] = f.rc_i;
  j["two_associative"] = f.two_associative;
  j["right_identity_3_8"] =
      f.right_identity_3_8 ? json(*f.right_identity_3_8) : json(nullptr);
  j["group"] = f.group ? json(*f.group) : json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// File helpers.
// ---------------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error("cannot parse " + path + ": " + e.what());
  }
}

inline FiniteAlgebra load_algebra(const std::string& path, const Limits& limits = {}) {
  return algebra_from_json(load_json_file(path), limits);
}

inline FiniteTopology load_topology(const std::string& path) {
  return topology_from_json(load_json_file(path));
}

inline Congruence load_congruence(const std::string& path) {
  return congruence_from_json(load_json_file(path));
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace palab
