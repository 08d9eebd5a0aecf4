#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palab/algebra.hpp"
#include "palab/parallel.hpp"

namespace palab {

// ---------------------------------------------------------------------------
// Check reports.  A failed check always carries the lexicographically least
// violating tuple (variables listed in the order the identity quantifies
// them, alpha index scanned outermost), so reports are stable golden values.
// ---------------------------------------------------------------------------

struct Counterexample {
  std::string identity;        // equation label, e.g. "(3.1)"
  std::optional<int> i;        // 1-based alpha index, when the identity has one
  std::vector<int> tuple;
  std::optional<int> lhs;
  std::optional<int> rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
  std::string check;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::string detail;  // optional note: non-applicable reasons, stats

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

inline CheckReport report_pass(std::string check, std::string detail = "") {
  return CheckReport{std::move(check), true, std::nullopt, std::move(detail)};
}

inline CheckReport report_fail(std::string check, Counterexample ce, std::string detail = "") {
  return CheckReport{std::move(check), false, std::move(ce), std::move(detail)};
}

namespace detail {

constexpr int kMaxVars = 96;

inline int th(const FiniteAlgebra& A, const int* first_n, int last) {
  std::uint64_t ix = 0;
  for (int j = 0; j < A.n; ++j) ix = ix * A.s + first_n[j];
  ix = ix * A.s + last;
  return A.theta.entries[ix];
}

inline int al(const FiniteAlgebra& A, int i, int x, int y) {
  return A.alphas[i].entries[static_cast<std::size_t>(x) * A.s + y];
}

// Scans one identity over s^nvars tuples (alpha index outermost when
// per_i), returning the least violation.  fn(i, vars) yields the two sides.
template <class Fn>
CheckReport scan_identity(const FiniteAlgebra& A, const std::string& check_name,
                          const std::string& identity, bool per_i, int nvars, Fn&& fn,
                          int workers) {
  if (nvars > kMaxVars) throw input_error(check_name + ": too many quantified variables");
  const std::uint64_t total = checked_pow(A.s, nvars, UINT64_MAX);
  const int imax = per_i ? A.n : 1;
  for (int i = 0; i < imax; ++i) {
    auto hit = exec::min_index_where(total, workers, [&](std::uint64_t idx) {
      std::array<int, kMaxVars> v;
      decode_tuple(idx, A.s, nvars, std::span<int>(v.data(), nvars));
      auto [l, r] = fn(i, v.data());
      return l != r;
    });
    if (hit) {
      std::array<int, kMaxVars> v;
      decode_tuple(*hit, A.s, nvars, std::span<int>(v.data(), nvars));
      auto [l, r] = fn(i, v.data());
      Counterexample ce;
      ce.identity = identity;
      if (per_i) ce.i = i + 1;
      ce.tuple.assign(v.begin(), v.begin() + nvars);
      ce.lhs = l;
      ce.rhs = r;
      return report_fail(check_name, std::move(ce));
    }
  }
  return report_pass(check_name);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Protomodularity: (2.1) alpha_i(a,a) = e_i and
// (2.2) theta(alpha_1(a,b),...,alpha_n(a,b),b) = a.
// ---------------------------------------------------------------------------

inline CheckReport check_protomodular(const FiniteAlgebra& A, int workers = 1) {
  const std::string name = "protomodular";
  CheckReport r21 = detail::scan_identity(
      A, name, "(2.1)", true, 1,
      [&](int i, const int* v) { return std::pair(detail::al(A, i, v[0], v[0]), A.es[i]); },
      workers);
  if (!r21.holds) return r21;
  return detail::scan_identity(
      A, name, "(2.2)", false, 2,
      [&](int, const int* v) {
        std::array<int, detail::kMaxVars> c;
        for (int j = 0; j < A.n; ++j) c[j] = detail::al(A, j, v[0], v[1]);
        return std::pair(detail::th(A, c.data(), v[1]), v[0]);
      },
      workers);
}

inline bool is_protomodular(const FiniteAlgebra& A, int workers = 1) {
  return check_protomodular(A, workers).holds;
}

inline void require_protomodular(const FiniteAlgebra& A, const std::string& who) {
  if (!is_protomodular(A))
    throw precondition_error(who + ": algebra is not protomodular ((2.1)/(2.2) fail)");
}

// Consequences (a), (b), (c) of (2.1)/(2.2); a sanity suite for the checker.
// Requires a protomodular algebra.
inline std::array<CheckReport, 3> check_derived_abc(const FiniteAlgebra& A, int workers = 1) {
  require_protomodular(A, "derived-abc");
  // (a) alpha_i(a,c) = alpha_i(b,c) for all i forces a = b
  CheckReport ra = detail::scan_identity(
      A, "derived-a", "(a)", false, 3,
      [&](int, const int* v) {
        for (int i = 0; i < A.n; ++i)
          if (detail::al(A, i, v[0], v[2]) != detail::al(A, i, v[1], v[2]))
            return std::pair(0, 0);  // premise fails, nothing to refute
        return std::pair(v[0], v[1]);
      },
      workers);
  // (b) alpha_i(a,b) = e_i for all i forces a = b
  CheckReport rb = detail::scan_identity(
      A, "derived-b", "(b)", false, 2,
      [&](int, const int* v) {
        for (int i = 0; i < A.n; ++i)
          if (detail::al(A, i, v[0], v[1]) != A.es[i]) return std::pair(0, 0);
        return std::pair(v[0], v[1]);
      },
      workers);
  // (c) theta(e_1,...,e_n,a) = a
  CheckReport rc = detail::scan_identity(
      A, "derived-c", "(c)", false, 1,
      [&](int, const int* v) { return std::pair(detail::th(A, A.es.data(), v[0]), v[0]); },
      workers);
  return {std::move(ra), std::move(rb), std::move(rc)};
}

// (2.5): theta(a_1..a_n, theta(b_1..b_n, c)) =
//        theta(theta(a,b_1), theta(a,b_2), ..., theta(a,b_n), c).
inline CheckReport check_2_associative(const FiniteAlgebra& A, int workers = 1) {
  return detail::scan_identity(
      A, "2-associative", "(2.5)", false, 2 * A.n + 1,
      [&](int, const int* v) {
        const int* a = v;
        const int* b = v + A.n;
        const int c = v[2 * A.n];
        int lhs = detail::th(A, a, detail::th(A, b, c));
        std::array<int, detail::kMaxVars> inner;
        for (int j = 0; j < A.n; ++j) inner[j] = detail::th(A, a, b[j]);
        return std::pair(lhs, detail::th(A, inner.data(), c));
      },
      workers);
}

// ---------------------------------------------------------------------------
// Right-cancellability conditions (i), (ii), (iii), (v).  These run on
// arbitrary tables; protomodularity is not assumed.
// ---------------------------------------------------------------------------

// (3.1): alpha_i(theta(a,b), theta(a',b)) is independent of b.
// Variables: (a_1..a_n, a'_1..a'_n, b, b').
inline CheckReport check_rc_i(const FiniteAlgebra& A, int workers = 1) {
  return detail::scan_identity(
      A, "rc-i", "(3.1)", true, 2 * A.n + 2,
      [&](int i, const int* v) {
        const int* a = v;
        const int* ap = v + A.n;
        const int b = v[2 * A.n], bp = v[2 * A.n + 1];
        int lhs = detail::al(A, i, detail::th(A, a, b), detail::th(A, ap, b));
        int rhs = detail::al(A, i, detail::th(A, a, bp), detail::th(A, ap, bp));
        return std::pair(lhs, rhs);
      },
      workers);
}

// (3.2): alpha_i(theta(a, theta(a',b)), theta(a'',b)) is independent of b.
// Variables: (a, a', a'', b, b').
inline CheckReport check_rc_ii(const FiniteAlgebra& A, int workers = 1) {
  return detail::scan_identity(
      A, "rc-ii", "(3.2)", true, 3 * A.n + 2,
      [&](int i, const int* v) {
        const int* a = v;
        const int* ap = v + A.n;
        const int* app = v + 2 * A.n;
        const int b = v[3 * A.n], bp = v[3 * A.n + 1];
        int lhs = detail::al(A, i, detail::th(A, a, detail::th(A, ap, b)), detail::th(A, app, b));
        int rhs =
            detail::al(A, i, detail::th(A, a, detail::th(A, ap, bp)), detail::th(A, app, bp));
        return std::pair(lhs, rhs);
      },
      workers);
}

// (3.3): alpha_i(theta(a,b), theta(a', theta(a'',b))) is independent of b.
inline CheckReport check_rc_iii(const FiniteAlgebra& A, int workers = 1) {
  return detail::scan_identity(
      A, "rc-iii", "(3.3)", true, 3 * A.n + 2,
      [&](int i, const int* v) {
        const int* a = v;
        const int* ap = v + A.n;
        const int* app = v + 2 * A.n;
        const int b = v[3 * A.n], bp = v[3 * A.n + 1];
        int lhs = detail::al(A, i, detail::th(A, a, b), detail::th(A, ap, detail::th(A, app, b)));
        int rhs =
            detail::al(A, i, detail::th(A, a, bp), detail::th(A, ap, detail::th(A, app, bp)));
        return std::pair(lhs, rhs);
      },
      workers);
}

// (3.6): alpha_i(theta(a,b), b) and (3.7): alpha_i(b, theta(a,b)) are both
// independent of b.
inline CheckReport check_rc_v(const FiniteAlgebra& A, int workers = 1) {
  const std::string name = "rc-v";
  CheckReport r36 = detail::scan_identity(
      A, name, "(3.6)", true, A.n + 2,
      [&](int i, const int* v) {
        const int* a = v;
        const int b = v[A.n], bp = v[A.n + 1];
        return std::pair(detail::al(A, i, detail::th(A, a, b), b),
                         detail::al(A, i, detail::th(A, a, bp), bp));
      },
      workers);
  if (!r36.holds) return r36;
  return detail::scan_identity(
      A, name, "(3.7)", true, A.n + 2,
      [&](int i, const int* v) {
        const int* a = v;
        const int b = v[A.n], bp = v[A.n + 1];
        return std::pair(detail::al(A, i, b, detail::th(A, a, b)),
                         detail::al(A, i, bp, detail::th(A, a, bp)));
      },
      workers);
}

// ---------------------------------------------------------------------------
// Condition (iv), semantic half: whenever (3.4) theta(a,b) = theta(a',b')
// holds, the value alpha_i(theta(a'',b'), b) must depend on (a, a', a'')
// alone.  Term realizability is witnessed separately by derive_Ti.
// ---------------------------------------------------------------------------

inline CheckReport check_rc_iv_semantic(const FiniteAlgebra& A, int workers = 1) {
  require_protomodular(A, "rc-iv");
  const std::string name = "rc-iv";
  const int n = A.n;
  const std::uint64_t triples = checked_pow(A.s, 3 * n, UINT64_MAX);
  const int s = A.s;

  // Violation at a triple: two (b,b')-pairs satisfying (3.4) with different
  // values of alpha_i(theta(a'',b'), b).
  auto value_conflict = [&](int i, const int* v, int* out_pair, int* out_vals) {
    const int* a = v;
    const int* ap = v + n;
    const int* app = v + 2 * n;
    int first_val = -1, first_b = -1, first_bp = -1;
    for (int b = 0; b < s; ++b)
      for (int bp = 0; bp < s; ++bp) {
        if (detail::th(A, a, b) != detail::th(A, ap, bp)) continue;
        int val = detail::al(A, i, detail::th(A, app, bp), b);
        if (first_val < 0) {
          first_val = val;
          first_b = b;
          first_bp = bp;
        } else if (val != first_val) {
          if (out_pair) {
            out_pair[0] = first_b;
            out_pair[1] = first_bp;
            out_pair[2] = b;
            out_pair[3] = bp;
            out_vals[0] = first_val;
            out_vals[1] = val;
          }
          return true;
        }
      }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    auto hit = exec::min_index_where(triples, workers, [&](std::uint64_t idx) {
      std::array<int, detail::kMaxVars> v;
      decode_tuple(idx, s, 3 * n, std::span<int>(v.data(), 3 * n));
      return value_conflict(i, v.data(), nullptr, nullptr);
    });
    if (hit) {
      std::array<int, detail::kMaxVars> v;
      decode_tuple(*hit, s, 3 * n, std::span<int>(v.data(), 3 * n));
      int pair[4], vals[2];
      value_conflict(i, v.data(), pair, vals);
      Counterexample ce;
      ce.identity = "(3.4)=>(3.5)";
      ce.i = i + 1;
      ce.tuple.assign(v.begin(), v.begin() + 3 * n);
      ce.tuple.insert(ce.tuple.end(), {pair[0], pair[1], pair[2], pair[3]});
      ce.lhs = vals[0];
      ce.rhs = vals[1];
      return report_fail(name, std::move(ce),
                         "value of alpha_i(theta(a'',b'),b) depends on the (b,b') pair");
    }
  }
  return report_pass(name);
}

// ---------------------------------------------------------------------------
// Explicit term witnesses for condition (iv), from the two constructive
// routes.  Route via-ii:
//   t_j(a',a'')   = alpha_j(theta(a'', e_j), theta(a', e_j))
//   T_i(a,a',a'') = alpha_i(theta(t_1,...,t_n, theta(a, e_i)), e_i)
// Route via-iii:
//   t_j(a)        = alpha_j(e_j, theta(a, e_j))
//   T_i(a,a',a'') = alpha_i(theta(a'', e_i), theta(t_1,...,t_n, theta(a', e_i)))
// T_i tables take 3n arguments ordered (a_1..a_n, a'_1..a'_n, a''_1..a''_n).
// ---------------------------------------------------------------------------

enum class TiRoute { via_ii, via_iii };

struct DerivedTermTables {
  TiRoute route;
  std::vector<OperationTable> T;  // arity 3n
  std::vector<OperationTable> t;  // arity 2n (via-ii: a',a'') or n (via-iii: a)
};

inline std::pair<DerivedTermTables, CheckReport> derive_Ti(const FiniteAlgebra& A, TiRoute route,
                                                           int workers = 1) {
  const std::string name = route == TiRoute::via_ii ? "derive-Ti(via-ii)" : "derive-Ti(via-iii)";
  if (!check_rc_i(A, workers).holds)
    throw precondition_error(name + ": algebra is not right-cancellable ((3.1) fails)");
  const int n = A.n, s = A.s;

  DerivedTermTables tables;
  tables.route = route;

  // The cancelled argument slot below is fixed to e_j exactly as in the
  // construction; by (3.1)/(3.7) any element gives the same table, which we
  // assert as a cross-check.
  if (route == TiRoute::via_ii) {
    const std::uint64_t t_total = checked_pow(s, 2 * n, UINT64_MAX);
    for (int j = 0; j < n; ++j) {
      std::vector<int> entries(t_total);
      std::vector<int> v(2 * n);
      for (std::uint64_t idx = 0; idx < t_total; ++idx) {
        decode_tuple(idx, s, 2 * n, v);
        const int* ap = v.data();
        const int* app = v.data() + n;
        int val = detail::al(A, j, detail::th(A, app, A.es[j]), detail::th(A, ap, A.es[j]));
        for (int x = 0; x < s; ++x)
          if (detail::al(A, j, detail::th(A, app, x), detail::th(A, ap, x)) != val)
            throw std::logic_error(name + ": (3.1) cross-check failed for t_j");
        entries[idx] = val;
      }
      tables.t.push_back(OperationTable{2 * n, s, std::move(entries)});
    }
  } else {
    for (int j = 0; j < n; ++j) {
      const std::uint64_t t_total = checked_pow(s, n, UINT64_MAX);
      std::vector<int> entries(t_total);
      std::vector<int> v(n);
      for (std::uint64_t idx = 0; idx < t_total; ++idx) {
        decode_tuple(idx, s, n, v);
        int val = detail::al(A, j, A.es[j], detail::th(A, v.data(), A.es[j]));
        for (int x = 0; x < s; ++x)
          if (detail::al(A, j, x, detail::th(A, v.data(), x)) != val)
            throw std::logic_error(name + ": (3.7) cross-check failed for t_j");
        entries[idx] = val;
      }
      tables.t.push_back(OperationTable{n, s, std::move(entries)});
    }
  }

  const std::uint64_t T_total = checked_pow(s, 3 * n, UINT64_MAX);
  std::vector<int> tvals(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> entries(T_total);
    std::vector<int> v(3 * n);
    for (std::uint64_t idx = 0; idx < T_total; ++idx) {
      decode_tuple(idx, s, 3 * n, v);
      const int* a = v.data();
      const int* ap = v.data() + n;
      const int* app = v.data() + 2 * n;
      if (route == TiRoute::via_ii) {
        for (int j = 0; j < n; ++j) {
          std::uint64_t tix = 0;
          for (int q = 0; q < n; ++q) tix = tix * s + ap[q];
          for (int q = 0; q < n; ++q) tix = tix * s + app[q];
          tvals[j] = tables.t[j].entries[tix];
        }
        entries[idx] =
            detail::al(A, i, detail::th(A, tvals.data(), detail::th(A, a, A.es[i])), A.es[i]);
      } else {
        for (int j = 0; j < n; ++j) {
          std::uint64_t tix = 0;
          for (int q = 0; q < n; ++q) tix = tix * s + a[q];
          tvals[j] = tables.t[j].entries[tix];
        }
        entries[idx] = detail::al(A, i, detail::th(A, app, A.es[i]),
                                  detail::th(A, tvals.data(), detail::th(A, ap, A.es[i])));
      }
    }
    tables.T.push_back(OperationTable{3 * n, s, std::move(entries)});
  }

  // Witness verification: on every tuple satisfying (3.4), the T_i value
  // equals alpha_i(theta(a'',b'), b).
  CheckReport report = report_pass(name);
  const std::uint64_t quad = checked_pow(s, 2 * n + 2, UINT64_MAX);
  const std::uint64_t app_total = checked_pow(s, n, UINT64_MAX);
  for (int i = 0; i < n && report.holds; ++i) {
    auto hit = exec::min_index_where(quad, workers, [&](std::uint64_t idx) {
      std::array<int, detail::kMaxVars> v;
      decode_tuple(idx, s, 2 * n + 2, std::span<int>(v.data(), 2 * n + 2));
      const int* a = v.data();
      const int* ap = v.data() + n;
      const int b = v[2 * n], bp = v[2 * n + 1];
      if (detail::th(A, a, b) != detail::th(A, ap, bp)) return false;
      std::array<int, detail::kMaxVars> app;
      for (std::uint64_t k = 0; k < app_total; ++k) {
        decode_tuple(k, s, n, std::span<int>(app.data(), n));
        std::uint64_t Tix = 0;
        for (int q = 0; q < n; ++q) Tix = Tix * s + a[q];
        for (int q = 0; q < n; ++q) Tix = Tix * s + ap[q];
        for (int q = 0; q < n; ++q) Tix = Tix * s + app[q];
        if (detail::al(A, i, detail::th(A, app.data(), bp), b) != tables.T[i].entries[Tix])
          return true;
      }
      return false;
    });
    if (hit) {
      std::array<int, detail::kMaxVars> v;
      decode_tuple(*hit, s, 2 * n + 2, std::span<int>(v.data(), 2 * n + 2));
      const int* a = v.data();
      const int* ap = v.data() + n;
      const int b = v[2 * n], bp = v[2 * n + 1];
      std::array<int, detail::kMaxVars> app;
      for (std::uint64_t k = 0; k < app_total; ++k) {
        decode_tuple(k, s, n, std::span<int>(app.data(), n));
        std::uint64_t Tix = 0;
        for (int q = 0; q < n; ++q) Tix = Tix * s + a[q];
        for (int q = 0; q < n; ++q) Tix = Tix * s + ap[q];
        for (int q = 0; q < n; ++q) Tix = Tix * s + app[q];
        int lhs = detail::al(A, i, detail::th(A, app.data(), bp), b);
        int rhs = tables.T[i].entries[Tix];
        if (lhs != rhs) {
          Counterexample ce;
          ce.identity = "(3.5)";
          ce.i = i + 1;
          ce.tuple.assign(a, a + n);
          ce.tuple.insert(ce.tuple.end(), ap, ap + n);
          ce.tuple.insert(ce.tuple.end(), app.begin(), app.begin() + n);
          ce.tuple.push_back(b);
          ce.tuple.push_back(bp);
          ce.lhs = lhs;
          ce.rhs = rhs;
          report = report_fail(name, std::move(ce));
          break;
        }
      }
      break;
    }
  }
  return {std::move(tables), std::move(report)};
}

// ---------------------------------------------------------------------------
// Lemma-style consistency on one algebra: (i) <=> (ii) <=> (iii) <=> (iv);
// any of them implies (v); with 2-associativity, (v) implies (i).
// ---------------------------------------------------------------------------

inline CheckReport check_lemma31_consistency(const FiniteAlgebra& A, int workers = 1) {
  require_protomodular(A, "lemma31");
  CheckReport ri = check_rc_i(A, workers);
  CheckReport rii = check_rc_ii(A, workers);
  CheckReport riii = check_rc_iii(A, workers);
  CheckReport riv = check_rc_iv_semantic(A, workers);
  CheckReport rv = check_rc_v(A, workers);
  CheckReport rassoc = check_2_associative(A, workers);

  std::string pattern = std::string("pattern: i=") + (ri.holds ? "1" : "0") +
                        " ii=" + (rii.holds ? "1" : "0") + " iii=" + (riii.holds ? "1" : "0") +
                        " iv=" + (riv.holds ? "1" : "0") + " v=" + (rv.holds ? "1" : "0") +
                        " 2assoc=" + (rassoc.holds ? "1" : "0");

  struct Implication {
    const char* label;
    const CheckReport* from;
    const CheckReport* to;
  };
  const Implication implications[] = {
      {"(i)=>(ii)", &ri, &rii},   {"(ii)=>(i)", &rii, &ri},  {"(i)=>(iii)", &ri, &riii},
      {"(iii)=>(i)", &riii, &ri}, {"(i)=>(iv)", &ri, &riv},  {"(iv)=>(i)", &riv, &ri},
      {"(i)=>(v)", &ri, &rv},
  };
  for (const auto& imp : implications) {
    if (imp.from->holds && !imp.to->holds) {
      Counterexample ce = *imp.to->counterexample;
      return report_fail("lemma31", std::move(ce),
                         std::string("violated implication ") + imp.label + "; " + pattern);
    }
  }
  if (rassoc.holds && rv.holds && !ri.holds) {
    Counterexample ce = *ri.counterexample;
    return report_fail("lemma31", std::move(ce),
                       "violated implication (2.5)&(v)=>(i); " + pattern);
  }
  return report_pass("lemma31", pattern);
}

// ---------------------------------------------------------------------------
// Group collapse for n=1 (traditional notation ab for theta(a,b) and a/b
// for alpha(a,b)).  If (3.1) and the right identity (3.8) ae=a hold, the
// algebra must be a group, with (3.9) a/e=a and (3.10) (ab)/(a'b)=a/a'.
// ---------------------------------------------------------------------------

inline CheckReport check_group_collapse(const FiniteAlgebra& A, int workers = 1) {
  const std::string name = "group";
  if (A.n != 1) throw input_error(name + ": requires an n=1 algebra");
  require_protomodular(A, name);
  const int e = A.es[0];

  if (!check_rc_i(A, workers).holds)
    return report_pass(name, "non-applicable: (3.1) fails, collapse hypothesis not met");
  CheckReport r38 = detail::scan_identity(
      A, name, "(3.8)", false, 1,
      [&](int, const int* v) { return std::pair(detail::th(A, v, e), v[0]); }, workers);
  if (!r38.holds)
    return report_pass(name, "non-applicable: right identity (3.8) fails, collapse hypothesis not met");

  CheckReport r = detail::scan_identity(
      A, name, "associativity", false, 3,
      [&](int, const int* v) {
        int ab = detail::th(A, v, v[1]);
        int bc = detail::th(A, v + 1, v[2]);
        return std::pair(detail::th(A, &ab, v[2]), detail::th(A, v, bc));
      },
      workers);
  if (!r.holds) return r;
  r = detail::scan_identity(
      A, name, "two-sided identity", false, 1,
      [&](int, const int* v) {
        int left = detail::th(A, &e, v[0]);
        if (left != v[0]) return std::pair(left, v[0]);
        return std::pair(detail::th(A, v, e), v[0]);
      },
      workers);
  if (!r.holds) return r;
  for (int a = 0; a < A.s; ++a) {
    bool found = false;
    for (int b = 0; b < A.s && !found; ++b)
      found = detail::th(A, &a, b) == e && detail::th(A, &b, a) == e;
    if (!found) {
      Counterexample ce;
      ce.identity = "two-sided inverse";
      ce.tuple = {a};
      return report_fail(name, std::move(ce), "element has no two-sided inverse");
    }
  }
  r = detail::scan_identity(
      A, name, "(3.9)", false, 1,
      [&](int, const int* v) { return std::pair(detail::al(A, 0, v[0], e), v[0]); }, workers);
  if (!r.holds) return r;
  r = detail::scan_identity(
      A, name, "(3.10)", false, 3,
      [&](int, const int* v) {
        int ab = detail::th(A, v, v[2]);
        int apb = detail::th(A, v + 1, v[2]);
        return std::pair(detail::al(A, 0, ab, apb), detail::al(A, 0, v[0], v[1]));
      },
      workers);
  if (!r.holds) return r;
  return report_pass(name, "group confirmed");
}

}  // namespace palab
