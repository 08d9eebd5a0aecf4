// palab: a finite-model workbench for topological protomodular algebras.
// Subcommands: verify, topologies, uniformity, search, product, quotient,
// congruences, example45.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palab/palab.hpp"

namespace {

using namespace palab;

struct RunConfig {
  Limits limits;
  int workers = 1;
  bool json_output = false;
};

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

void print_report_human(const CheckReport& r) {
  if (r.holds) {
    std::cout << "check " << r.check << ": holds";
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    return;
  }
  const Counterexample& ce = *r.counterexample;
  std::cout << "check " << r.check << ": FAILS -- " << ce.identity << " fails at ";
  if (ce.i) std::cout << "i=" << *ce.i << " ";
  std::cout << "tuple=" << tuple_str(ce.tuple);
  if (ce.lhs && ce.rhs) std::cout << ": lhs=" << *ce.lhs << " rhs=" << *ce.rhs;
  if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
  std::cout << "\n";
}

// 0 = all hold, 1 = some check failed.
int emit_reports(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  if (cfg.json_output) {
    std::cout << reports_to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_human(r);
  }
  for (const auto& r : reports)
    if (!r.holds) return 1;
  return 0;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& algebra_file,
               const std::string& checks_csv) {
  FiniteAlgebra A = load_algebra(algebra_file, cfg.limits);
  std::vector<std::string> names;
  if (checks_csv.empty()) {
    names = {"protomodular", "abc", "2-assoc", "rc-i", "rc-ii", "rc-iii", "rc-iv", "rc-v",
             "lemma31"};
    if (A.n == 1) names.push_back("group");
  } else {
    names = split_list(checks_csv);
  }

  std::vector<CheckReport> reports;
  bool precondition_failed = false;
  for (const auto& name : names) {
    try {
      if (name == "protomodular") {
        reports.push_back(check_protomodular(A, cfg.workers));
      } else if (name == "abc") {
        for (auto& r : check_derived_abc(A, cfg.workers)) reports.push_back(std::move(r));
      } else if (name == "2-assoc") {
        reports.push_back(check_2_associative(A, cfg.workers));
      } else if (name == "rc-i") {
        reports.push_back(check_rc_i(A, cfg.workers));
      } else if (name == "rc-ii") {
        reports.push_back(check_rc_ii(A, cfg.workers));
      } else if (name == "rc-iii") {
        reports.push_back(check_rc_iii(A, cfg.workers));
      } else if (name == "rc-iv") {
        reports.push_back(check_rc_iv_semantic(A, cfg.workers));
      } else if (name == "rc-v") {
        reports.push_back(check_rc_v(A, cfg.workers));
      } else if (name == "lemma31") {
        reports.push_back(check_lemma31_consistency(A, cfg.workers));
      } else if (name == "group") {
        reports.push_back(check_group_collapse(A, cfg.workers));
      } else {
        throw input_error("unknown check: " + name);
      }
    } catch (const precondition_error& e) {
      std::cerr << "precondition failure: " << e.what() << "\n";
      precondition_failed = true;
    }
  }
  int rc = emit_reports(cfg, reports);
  return precondition_failed ? 1 : rc;
}

// ---------------------------------------------------------------------------
// topologies
// ---------------------------------------------------------------------------

int cmd_topologies(const RunConfig& cfg, const std::string& algebra_file,
                   const std::string& axiom, bool list, bool lemma41, bool theorem42) {
  FiniteAlgebra A = load_algebra(algebra_file, cfg.limits);
  auto compat = compatible_topologies(A, cfg.limits, cfg.workers);

  auto axiom_match = [&](const SeparationAxioms& ax) {
    if (axiom.empty()) return true;
    if (axiom == "t0") return ax.t0;
    if (axiom == "t1") return ax.t1;
    if (axiom == "t2") return ax.t2;
    if (axiom == "regular") return ax.regular;
    if (axiom == "completely-regular") return ax.completely_regular;
    throw input_error("unknown axiom: " + axiom);
  };

  json jtops = json::array();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < compat.size(); ++i) {
    SeparationAxioms ax = sep_axioms(compat[i]);
    if (!axiom_match(ax)) continue;
    selected.push_back(i);
    if (cfg.json_output) {
      json j = topology_to_json(compat[i]);
      j["index"] = i;
      j["axioms"] = {{"t0", ax.t0},
                     {"t1", ax.t1},
                     {"t2", ax.t2},
                     {"regular", ax.regular},
                     {"completely_regular", ax.completely_regular}};
      jtops.push_back(std::move(j));
    } else {
      std::cout << "#" << i << " opens=" << compat[i].opens.size() << " t0=" << ax.t0
                << " t1=" << ax.t1 << " t2=" << ax.t2 << " regular=" << ax.regular
                << " completely_regular=" << ax.completely_regular;
      if (list) std::cout << " " << topology_to_json(compat[i])["opens"].dump();
      std::cout << "\n";
    }
  }
  if (!cfg.json_output)
    std::cout << "compatible topologies: " << compat.size() << " (listed " << selected.size()
              << ")\n";

  std::vector<CheckReport> reports;
  if (lemma41) reports.push_back(check_lemma_4_1(A, cfg.limits, cfg.workers));
  if (theorem42) reports.push_back(check_theorem_4_2(A, cfg.limits, cfg.workers));

  if (cfg.json_output) {
    json out;
    out["compatible"] = std::move(jtops);
    out["total_compatible"] = compat.size();
    out["reports"] = reports_to_json(reports);
    std::cout << out.dump(2) << "\n";
    for (const auto& r : reports)
      if (!r.holds) return 1;
    return 0;
  }
  return emit_reports(cfg, reports);
}

// ---------------------------------------------------------------------------
// uniformity
// ---------------------------------------------------------------------------

int cmd_uniformity(const RunConfig& cfg, const std::string& algebra_file,
                   const std::string& topology_file) {
  FiniteAlgebra A = load_algebra(algebra_file, cfg.limits);
  FiniteTopology T = load_topology(topology_file);
  if (T.s != A.s) throw input_error("topology carrier does not match algebra carrier");

  GeneratorSet gen = generator_coverings(A, T);
  json jgen = json::array();
  for (std::size_t i = 0; i < gen.coverings.size(); ++i) {
    json j = covering_to_json(gen.coverings[i]);
    j["H"] = subsets_to_json(gen.tuples[i].H);
    auto refinement = search_star_refinement(A, T, gen.tuples[i]);
    j["star_refinement_H"] = refinement ? subsets_to_json(refinement->H) : json(nullptr);
    jgen.push_back(std::move(j));
    if (!cfg.json_output) {
      std::cout << "generator C_H #" << i << ": H=" << jgen.back()["H"].dump()
                << " blocks=" << jgen.back()["blocks"].dump() << " star-refinement H'="
                << jgen.back()["star_refinement_H"].dump() << "\n";
    }
  }

  std::vector<CheckReport> reports;
  reports.push_back(verify_C_conditions(A, T, cfg.workers));
  bool precondition_failed = false;
  try {
    reports.push_back(check_lemma_4_4(A, T, cfg.workers));
  } catch (const precondition_error& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    precondition_failed = true;
  }

  if (cfg.json_output) {
    json out;
    out["generators"] = std::move(jgen);
    out["reports"] = reports_to_json(reports);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_human(r);
  }
  for (const auto& r : reports)
    if (!r.holds) return 1;
  return precondition_failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

Filter parse_filter(const std::string& name) {
  if (name == "protomodular") return Filter::protomodular;
  if (name == "rc-i") return Filter::rc_i;
  if (name == "2-assoc") return Filter::two_associative;
  if (name == "right-identity-3-8") return Filter::right_identity_3_8;
  throw input_error("unknown filter: " + name +
                    " (expected protomodular|rc-i|2-assoc|right-identity-3-8)");
}

int cmd_search(const RunConfig& cfg, int s, int n, const std::vector<std::string>& filter_names,
               bool dedup, const std::string& out_path, bool classify_table) {
  SearchSpec spec;
  spec.s = s;
  spec.n = n;
  spec.dedup = dedup;
  for (const auto& f : filter_names) spec.filters.push_back(parse_filter(f));

  SearchResult result = search(spec, cfg.limits, cfg.workers);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write catalog: " + out_path);
    for (const auto& A : result.algebras)
      out << catalog_line(A, predicate_flags(A, cfg.workers)).dump() << "\n";
  }

  if (cfg.json_output) {
    json out;
    out["summary"] = {{"budget_estimate", result.summary.budget_estimate},
                      {"candidates", result.summary.candidates},
                      {"matched", result.summary.matched},
                      {"returned", result.summary.returned}};
    json algebras = json::array();
    for (const auto& A : result.algebras)
      algebras.push_back(catalog_line(A, predicate_flags(A, cfg.workers)));
    out["algebras"] = std::move(algebras);
    if (classify_table) {
      json rows = json::array();
      for (const auto& row : classify(spec, cfg.limits, cfg.workers).rows) {
        json r = {{"rc_i", row.rc_i},
                  {"two_associative", row.two_associative},
                  {"count", row.count}};
        r["right_identity_3_8"] =
            row.right_identity_3_8 ? json(*row.right_identity_3_8) : json(nullptr);
        r["group"] = row.group ? json(*row.group) : json(nullptr);
        rows.push_back(std::move(r));
      }
      out["classification"] = std::move(rows);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "search s=" << s << " n=" << n << ": candidates=" << result.summary.candidates
              << " matched=" << result.summary.matched << " returned=" << result.summary.returned
              << (dedup ? " (canonical forms)" : "") << "\n";
    if (classify_table) {
      auto opt_str = [](const std::optional<bool>& v) {
        return v ? (*v ? std::string("1") : std::string("0")) : std::string("-");
      };
      std::cout << "rc_i 2assoc right_id group count\n";
      for (const auto& row : classify(spec, cfg.limits, cfg.workers).rows)
        std::cout << "   " << row.rc_i << "      " << row.two_associative << "        "
                  << opt_str(row.right_identity_3_8) << "     " << opt_str(row.group) << " "
                  << row.count << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// product / quotient / congruences / example45
// ---------------------------------------------------------------------------

void emit_algebra(const RunConfig& cfg, const FiniteAlgebra& A, const std::string& out_path) {
  (void)cfg;
  if (out_path.empty()) {
    std::cout << algebra_to_json(A).dump(2) << "\n";
  } else {
    save_json_file(out_path, algebra_to_json(A));
  }
}

int cmd_product(const RunConfig& cfg, const std::string& algebra_file, int k,
                const std::string& out_path) {
  FiniteAlgebra A = load_algebra(algebra_file, cfg.limits);
  emit_algebra(cfg, power(A, k, cfg.limits), out_path);
  return 0;
}

int cmd_quotient(const RunConfig& cfg, const std::string& algebra_file,
                 const std::string& congruence_file, const std::string& out_path) {
  FiniteAlgebra A = load_algebra(algebra_file, cfg.limits);
  Congruence R = load_congruence(congruence_file);
  emit_algebra(cfg, quotient(A, R), out_path);
  return 0;
}

int cmd_congruences(const RunConfig& cfg, const std::string& algebra_file) {
  FiniteAlgebra A = load_algebra(algebra_file, cfg.limits);
  auto congruences = enumerate_congruences(A, cfg.limits);
  if (cfg.json_output) {
    json arr = json::array();
    for (const auto& R : congruences) arr.push_back(congruence_to_json(R));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& R : congruences)
      std::cout << congruence_to_json(R).dump() << "\n";
    std::cout << "congruences: " << congruences.size() << "\n";
  }
  return 0;
}

int cmd_example45(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = verify_example_4_5(cfg.limits, cfg.workers);
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  int rc = emit_reports(cfg, reports);
  if (!cfg.json_output)
    std::cout << "example45: " << reports.size() << " reports, "
              << (rc == 0 ? "all hold" : "FAILURES PRESENT") << " (" << ms << " ms)\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for topological protomodular algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_flag("--json", cfg.json_output, "machine-readable JSON output");
  app.add_option("--workers", cfg.workers, "worker thread budget")
      ->envname("PALAB_WORKERS")
      ->check(CLI::PositiveNumber);
  app.add_option("--topology-s-max", cfg.limits.topology_s_max,
                 "carrier cap for topology enumeration")
      ->envname("PALAB_TOPOLOGY_S_MAX")
      ->check(CLI::PositiveNumber);
  app.add_option("--table-entry-max", cfg.limits.table_entry_max,
                 "cap on operation table entries")
      ->envname("PALAB_TABLE_ENTRY_MAX")
      ->check(CLI::PositiveNumber);
  app.add_option("--congruence-s-max", cfg.limits.congruence_s_max,
                 "carrier cap for congruence enumeration")
      ->envname("PALAB_CONGRUENCE_S_MAX")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-budget", cfg.limits.search_budget,
                 "candidate bound for structure search")
      ->envname("PALAB_SEARCH_BUDGET")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity checks on an algebra file")->fallthrough();
  std::string verify_file, verify_checks;
  verify->add_option("algebra", verify_file, "algebra JSON file")->required();
  verify->add_option("--checks", verify_checks,
                     "comma list: protomodular,abc,2-assoc,rc-i,rc-ii,rc-iii,rc-iv,rc-v,"
                     "lemma31,group (default: all applicable)");

  // topologies
  auto* topologies =
      app.add_subcommand("topologies", "enumerate compatible topologies and separation axioms")->fallthrough();
  std::string topo_file, topo_axiom;
  bool topo_list = false, topo_lemma41 = false, topo_theorem42 = false;
  topologies->add_option("algebra", topo_file, "algebra JSON file")->required();
  topologies->add_option("--axiom", topo_axiom,
                         "filter: t0|t1|t2|regular|completely-regular");
  topologies->add_flag("--list", topo_list, "print each topology's opens");
  topologies->add_flag("--lemma41", topo_lemma41, "check T0 => T1 over compatible topologies");
  topologies->add_flag("--theorem42", topo_theorem42,
                       "check T0 => completely regular over compatible topologies");

  // uniformity
  auto* uniformity =
      app.add_subcommand("uniformity", "covering conditions (C1)-(C4) and the induced topology")->fallthrough();
  std::string uni_algebra, uni_topology;
  uniformity->add_option("algebra", uni_algebra, "algebra JSON file")->required();
  uniformity->add_option("topology", uni_topology, "topology JSON file")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "exhaustive structure search")->fallthrough();
  int search_s = 2, search_n = 1;
  std::vector<std::string> search_filters;
  bool search_dedup = false, search_classify = false;
  std::string search_out;
  search_cmd->add_option("--s", search_s, "carrier size")->required();
  search_cmd->add_option("--n", search_n, "signature parameter")->required();
  search_cmd->add_option("--filter", search_filters,
                         "protomodular|rc-i|2-assoc|right-identity-3-8 (repeatable)");
  search_cmd->add_flag("--dedup", search_dedup, "return canonical forms only");
  search_cmd->add_option("--out", search_out, "write JSON-lines catalog here");
  search_cmd->add_flag("--classify", search_classify, "print predicate classification table");

  // product
  auto* product = app.add_subcommand("product", "direct power of an algebra")->fallthrough();
  std::string prod_file, prod_out;
  int prod_k = 1;
  product->add_option("algebra", prod_file, "algebra JSON file")->required();
  product->add_option("--power", prod_k, "exponent k")->required();
  product->add_option("--out", prod_out, "output file (default stdout)");

  // quotient
  auto* quot = app.add_subcommand("quotient", "quotient by a congruence")->fallthrough();
  std::string quot_file, quot_cong, quot_out;
  quot->add_option("algebra", quot_file, "algebra JSON file")->required();
  quot->add_option("congruence", quot_cong, "congruence JSON file")->required();
  quot->add_option("--out", quot_out, "output file (default stdout)");

  // congruences
  auto* congs = app.add_subcommand("congruences", "enumerate all congruences")->fallthrough();
  std::string congs_file;
  congs->add_option("algebra", congs_file, "algebra JSON file")->required();

  // example45
  app.add_subcommand("example45", "run the full Example 4.5 verification bundle")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("verify")) return cmd_verify(cfg, verify_file, verify_checks);
    if (app.got_subcommand("topologies"))
      return cmd_topologies(cfg, topo_file, topo_axiom, topo_list, topo_lemma41, topo_theorem42);
    if (app.got_subcommand("uniformity")) return cmd_uniformity(cfg, uni_algebra, uni_topology);
    if (app.got_subcommand("search"))
      return cmd_search(cfg, search_s, search_n, search_filters, search_dedup, search_out,
                        search_classify);
    if (app.got_subcommand("product")) return cmd_product(cfg, prod_file, prod_k, prod_out);
    if (app.got_subcommand("quotient")) return cmd_quotient(cfg, quot_file, quot_cong, quot_out);
    if (app.got_subcommand("congruences")) return cmd_congruences(cfg, congs_file);
    if (app.got_subcommand("example45")) return cmd_example45(cfg);
  } catch (const precondition_error& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return 1;
  } catch (const cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
