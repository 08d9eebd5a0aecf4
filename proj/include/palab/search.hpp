#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "palab/fixtures.hpp"
#include "palab/uniformity.hpp"

namespace palab {

// ---------------------------------------------------------------------------
// Exhaustive, constraint-pruned search over the protomodular universe on a
// small carrier.  (2.2) forces every map x -> theta(x_1..x_n, b) to be
// surjective, so for n=1 each theta column is a permutation with the alpha
// column its inverse and theta(e,b) = b; the search enumerates those
// permutation columns directly.  For n >= 2, theta is enumerated freely and
// the alpha tuples are chosen from the solution sets (2.2) leaves free,
// with the diagonal forced to the constants by (2.1).
// ---------------------------------------------------------------------------

enum class Filter { protomodular, rc_i, two_associative, right_identity_3_8 };

struct SearchSpec {
  int s = 2;
  int n = 1;
  std::vector<Filter> filters;
  bool dedup = false;
};

struct SearchSummary {
  std::uint64_t budget_estimate = 0;  // s^((n+1)*s^n)
  std::uint64_t candidates = 0;       // structures produced by the enumerator
  std::uint64_t matched = 0;          // after filters, before dedup
  std::uint64_t returned = 0;
};

struct SearchResult {
  std::vector<FiniteAlgebra> algebras;
  SearchSummary summary;
};

struct PredicateFlags {
  bool protomodular = false;
  bool rc_i = false;
  bool two_associative = false;
  std::optional<bool> right_identity_3_8;  // n=1 only
  std::optional<bool> group;               // n=1 only
};

// Right identity (3.8): theta(a, e) = a for every a (n=1).
inline bool has_right_identity_38(const FiniteAlgebra& A) {
  if (A.n != 1) throw input_error("right_identity_3_8: requires n=1");
  for (int a = 0; a < A.s; ++a)
    if (detail::th(A, &a, A.es[0]) != a) return false;
  return true;
}

// Plain group axioms for theta with unit e (n=1): associativity by triple
// loop, two-sided identity, two-sided inverses.
inline bool is_group_n1(const FiniteAlgebra& A) {
  if (A.n != 1) throw input_error("is_group_n1: requires n=1");
  const int e = A.es[0];
  for (int a = 0; a < A.s; ++a)
    if (detail::th(A, &a, e) != a || detail::th(A, &e, a) != a) return false;
  for (int a = 0; a < A.s; ++a)
    for (int b = 0; b < A.s; ++b)
      for (int c = 0; c < A.s; ++c) {
        int ab = detail::th(A, &a, b);
        int bc = detail::th(A, &b, c);
        if (detail::th(A, &ab, c) != detail::th(A, &a, bc)) return false;
      }
  for (int a = 0; a < A.s; ++a) {
    bool found = false;
    for (int b = 0; b < A.s && !found; ++b)
      found = detail::th(A, &a, b) == e && detail::th(A, &b, a) == e;
    if (!found) return false;
  }
  return true;
}

inline PredicateFlags predicate_flags(const FiniteAlgebra& A, int workers = 1) {
  PredicateFlags f;
  f.protomodular = is_protomodular(A, workers);
  f.rc_i = check_rc_i(A, workers).holds;
  f.two_associative = check_2_associative(A, workers).holds;
  if (A.n == 1) {
    f.right_identity_3_8 = has_right_identity_38(A);
    f.group = is_group_n1(A);
  }
  return f;
}

inline bool passes_filters(const FiniteAlgebra& A, const std::vector<Filter>& filters) {
  for (Filter f : filters) {
    switch (f) {
      case Filter::protomodular:
        if (!is_protomodular(A)) return false;
        break;
      case Filter::right_identity_3_8:
        if (!has_right_identity_38(A)) return false;
        break;
      case Filter::two_associative:
        if (!check_2_associative(A).holds) return false;
        break;
      case Filter::rc_i:
        if (!check_rc_i(A).holds) return false;
        break;
    }
  }
  return true;
}

inline std::uint64_t search_budget_estimate(int s, int n) {
  std::uint64_t exp64 = checked_pow(static_cast<std::uint64_t>(s), n, 1u << 30);
  if (exp64 > (1u << 30)) return UINT64_MAX;
  std::uint64_t exponent = static_cast<std::uint64_t>(n + 1) * exp64;
  if (exponent > 10000) return UINT64_MAX;
  return checked_pow(static_cast<std::uint64_t>(s), static_cast<int>(exponent), UINT64_MAX - 1);
}

namespace detail {

inline std::vector<std::vector<int>> permutations_fixing(int s, int from, int to) {
  std::vector<int> p(s);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (p[from] == to) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// n=1 enumerator: candidate = (e, one permutation per column).
inline std::vector<FiniteAlgebra> search_n1(const SearchSpec& spec, int workers,
                                            std::uint64_t* candidates) {
  const int s = spec.s;
  std::uint64_t per_column = 1;
  for (int k = 2; k < s; ++k) per_column *= static_cast<std::uint64_t>(k);  // (s-1)!
  std::uint64_t per_e = 1;
  for (int b = 0; b < s; ++b) per_e *= per_column;
  const std::uint64_t total = static_cast<std::uint64_t>(s) * per_e;
  *candidates = total;

  // column_options[e][b] = permutations pi with pi(e) = b
  std::vector<std::vector<std::vector<std::vector<int>>>> column_options(s);
  for (int e = 0; e < s; ++e) {
    column_options[e].resize(s);
    for (int b = 0; b < s; ++b) column_options[e][b] = permutations_fixing(s, e, b);
  }

  return exec::parallel_collect<FiniteAlgebra>(
      total, workers, [&](std::uint64_t idx) -> std::optional<FiniteAlgebra> {
        const int e = static_cast<int>(idx / per_e);
        std::uint64_t rest = idx % per_e;
        std::vector<int> theta(s * s), alpha(s * s);
        for (int b = s - 1; b >= 0; --b) {
          const auto& pi = column_options[e][b][rest % per_column];
          rest /= per_column;
          for (int x = 0; x < s; ++x) {
            theta[x * s + b] = pi[x];
            alpha[pi[x] * s + b] = x;  // inverse column
          }
        }
        FiniteAlgebra A;
        A.s = s;
        A.n = 1;
        A.theta = OperationTable{2, s, std::move(theta)};
        A.alphas.push_back(OperationTable{2, s, std::move(alpha)});
        A.es = {e};
        if (!passes_filters(A, spec.filters)) return std::nullopt;
        return A;
      });
}

// n>=2 enumerator: theta free, alphas chosen from the (2.2) solution sets.
inline std::vector<FiniteAlgebra> search_general(const SearchSpec& spec, int workers,
                                                 std::uint64_t* candidates) {
  const int s = spec.s, n = spec.n;
  const std::uint64_t es_total = checked_pow(s, n, UINT64_MAX);
  const std::size_t theta_entries = static_cast<std::size_t>(checked_pow(s, n + 1, UINT64_MAX));
  const std::uint64_t theta_total = checked_pow(s, static_cast<int>(theta_entries), UINT64_MAX - 1);
  if (theta_total > (UINT64_MAX - 1) / es_total)
    throw cap_error("search: enumeration space overflows");
  const std::uint64_t outer_total = es_total * theta_total;

  std::atomic<std::uint64_t> cand{0};
  auto result = exec::parallel_collect<std::vector<FiniteAlgebra>>(
      outer_total, workers, [&](std::uint64_t idx) -> std::optional<std::vector<FiniteAlgebra>> {
        const std::uint64_t e_idx = idx / theta_total;
        std::uint64_t t_idx = idx % theta_total;
        std::vector<int> es(n);
        decode_tuple(e_idx, s, n, es);
        std::vector<int> theta(theta_entries);
        for (std::size_t j = theta_entries; j-- > 0;) {
          theta[j] = static_cast<int>(t_idx % s);
          t_idx /= s;
        }

        FiniteAlgebra base;
        base.s = s;
        base.n = n;
        base.theta = OperationTable{n + 1, s, theta};
        base.es = es;

        // derived fact (c): theta(e_1..e_n, a) = a is necessary
        for (int a = 0; a < s; ++a)
          if (th(base, es.data(), a) != a) return std::nullopt;

        // solution sets S(a,b) = { c-tuple : theta(c, b) = a }
        const std::uint64_t ctuples = checked_pow(s, n, UINT64_MAX);
        std::vector<std::vector<std::uint64_t>> sol(static_cast<std::size_t>(s) * s);
        std::vector<int> c(n);
        for (std::uint64_t ci = 0; ci < ctuples; ++ci) {
          decode_tuple(ci, s, n, c);
          for (int b = 0; b < s; ++b)
            sol[static_cast<std::size_t>(th(base, c.data(), b)) * s + b].push_back(ci);
        }
        const std::uint64_t e_ci = encode_tuple(es, s);

        // free slots: off-diagonal (a,b); diagonal forced to the constants
        std::vector<std::size_t> free_slots;
        std::uint64_t combos = 1;
        for (int a = 0; a < s; ++a)
          for (int b = 0; b < s; ++b) {
            const std::size_t slot = static_cast<std::size_t>(a) * s + b;
            if (sol[slot].empty()) return std::nullopt;
            if (a == b) continue;  // forced to e-tuple, present by (c)
            free_slots.push_back(slot);
            combos *= sol[slot].size();
          }

        std::vector<FiniteAlgebra> hits;
        std::vector<std::uint64_t> choice(static_cast<std::size_t>(s) * s, e_ci);
        for (std::uint64_t combo = 0; combo < combos; ++combo) {
          std::uint64_t rest = combo;
          for (std::size_t k = free_slots.size(); k-- > 0;) {
            const auto& opts = sol[free_slots[k]];
            choice[free_slots[k]] = opts[rest % opts.size()];
            rest /= opts.size();
          }
          cand.fetch_add(1, std::memory_order_relaxed);
          FiniteAlgebra A = base;
          std::vector<int> ct(n);
          A.alphas.assign(n, OperationTable{2, s, std::vector<int>(s * s)});
          for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
              decode_tuple(choice[static_cast<std::size_t>(a) * s + b], s, n, ct);
              for (int i = 0; i < n; ++i) A.alphas[i].entries[a * s + b] = ct[i];
            }
          if (passes_filters(A, spec.filters)) hits.push_back(std::move(A));
        }
        if (hits.empty()) return std::nullopt;
        return hits;
      });

  *candidates = cand.load();
  std::vector<FiniteAlgebra> flat;
  for (auto& chunk : result)
    for (auto& A : chunk) flat.push_back(std::move(A));
  return flat;
}

}  // namespace detail

inline SearchResult search(const SearchSpec& spec, const Limits& limits = {}, int workers = 1) {
  if (spec.s < 1) throw input_error("search: s must be positive");
  if (spec.n < 1) throw input_error("search: n must be at least 1");
  for (Filter f : spec.filters)
    if (f == Filter::right_identity_3_8 && spec.n != 1)
      throw input_error("search: right_identity_3_8 filter requires n=1");

  SearchResult result;
  result.summary.budget_estimate = search_budget_estimate(spec.s, spec.n);
  if (result.summary.budget_estimate > limits.search_budget)
    throw cap_error("search: candidate bound s^((n+1)*s^n) exceeds budget " +
                    std::to_string(limits.search_budget));

  std::uint64_t candidates = 0;
  std::vector<FiniteAlgebra> hits = spec.n == 1
                                        ? detail::search_n1(spec, workers, &candidates)
                                        : detail::search_general(spec, workers, &candidates);
  result.summary.candidates = candidates;
  result.summary.matched = hits.size();

  if (spec.dedup) {
    for (auto& A : hits) A = canonical_form(A);
    std::sort(hits.begin(), hits.end(), algebra_less);
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  } else {
    std::sort(hits.begin(), hits.end(), algebra_less);
  }
  result.summary.returned = hits.size();
  result.algebras = std::move(hits);
  return result;
}

// ---------------------------------------------------------------------------
// Classification: counts per predicate combination over the searched
// universe.
// ---------------------------------------------------------------------------

struct ClassifyRow {
  bool rc_i = false;
  bool two_associative = false;
  std::optional<bool> right_identity_3_8;
  std::optional<bool> group;
  std::uint64_t count = 0;
};

struct ClassifyResult {
  std::vector<ClassifyRow> rows;
  SearchSummary summary;
};

inline ClassifyResult classify(const SearchSpec& spec, const Limits& limits = {},
                               int workers = 1) {
  SearchResult found = search(spec, limits, workers);
  std::map<std::tuple<bool, bool, int, int>, std::uint64_t> table;
  for (const auto& A : found.algebras) {
    PredicateFlags f = predicate_flags(A, workers);
    auto opt_key = [](const std::optional<bool>& v) { return v ? (*v ? 1 : 0) : -1; };
    table[{f.rc_i, f.two_associative, opt_key(f.right_identity_3_8), opt_key(f.group)}]++;
  }
  ClassifyResult out;
  out.summary = found.summary;
  for (const auto& [key, count] : table) {
    ClassifyRow row;
    row.rc_i = std::get<0>(key);
    row.two_associative = std::get<1>(key);
    if (std::get<2>(key) >= 0) row.right_identity_3_8 = std::get<2>(key) == 1;
    if (std::get<3>(key) >= 0) row.group = std::get<3>(key) == 1;
    row.count = count;
    out.rows.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The full Example 4.5 pipeline: the two-element n=2 algebra, its squares
// and cubes, and every quotient, pushed through the protomodularity,
// cancellability, separation and uniformity checks (topology work only at
// carriers within the enumeration cap).
// ---------------------------------------------------------------------------

inline void example45_stage(std::vector<CheckReport>& reports, const std::string& label,
                            const FiniteAlgebra& A, const Limits& limits, int workers) {
  auto push = [&](CheckReport r) {
    r.check = label + "/" + r.check;
    reports.push_back(std::move(r));
  };
  push(check_protomodular(A, workers));
  push(check_rc_i(A, workers));
  push(check_lemma31_consistency(A, workers));
  if (A.s <= limits.topology_s_max) {
    push(check_lemma_4_1(A, limits, workers));
    push(check_theorem_4_2(A, limits, workers));
    auto compat = compatible_topologies(A, limits, workers);
    for (std::size_t ti = 0; ti < compat.size(); ++ti) {
      if (!sep_axioms(compat[ti]).t0) continue;
      std::string tlabel = label + "/T" + std::to_string(ti);
      CheckReport rc = verify_C_conditions(A, compat[ti], workers);
      rc.check = tlabel + "/" + rc.check;
      reports.push_back(std::move(rc));
      CheckReport rl = check_lemma_4_4(A, compat[ti], workers);
      rl.check = tlabel + "/" + rl.check;
      reports.push_back(std::move(rl));
    }
  }
}

inline std::vector<CheckReport> verify_example_4_5(const Limits& limits = {}, int workers = 1) {
  std::vector<CheckReport> reports;
  const FiniteAlgebra E45 = fixtures::e45();
  example45_stage(reports, "E45", E45, limits, workers);

  for (int k = 2; k <= 3; ++k) {
    FiniteAlgebra P = power(E45, k, limits);
    std::string plabel = "E45^" + std::to_string(k);
    example45_stage(reports, plabel, P, limits, workers);
    auto congruences = enumerate_congruences(P, limits);
    for (std::size_t qi = 0; qi < congruences.size(); ++qi) {
      FiniteAlgebra Q = quotient(P, congruences[qi]);
      example45_stage(reports, plabel + "/Q" + std::to_string(qi), Q, limits, workers);
    }
  }
  return reports;
}

}  // namespace palab
