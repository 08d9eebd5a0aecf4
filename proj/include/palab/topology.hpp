#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "palab/checks.hpp"

namespace palab {

// Subsets of the carrier {0..s-1} are bitmasks; bit x is element x.

inline std::uint32_t full_mask(int s) { return s >= 32 ? ~0u : ((1u << s) - 1); }

struct FiniteTopology {
  int s = 0;
  std::vector<std::uint32_t> opens;  // sorted ascending as masks, unique

  bool contains(std::uint32_t m) const {
    return std::binary_search(opens.begin(), opens.end(), m);
  }

  // Minimal open neighborhood of each point: the intersection of all opens
  // containing it (finite carrier, so it is itself open).
  std::vector<std::uint32_t> minimal_neighborhoods() const {
    std::vector<std::uint32_t> U(s, full_mask(s));
    for (std::uint32_t o : opens)
      for (int x = 0; x < s; ++x)
        if (o & (1u << x)) U[x] &= o;
    return U;
  }

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;
};

inline bool is_topology(const std::vector<std::uint32_t>& family, int s) {
  if (s <= 0 || s > 31) return false;
  const std::uint32_t full = full_mask(s);
  auto has = [&](std::uint32_t m) {
    return std::find(family.begin(), family.end(), m) != family.end();
  };
  if (!has(0) || !has(full)) return false;
  for (std::uint32_t a : family) {
    if (a & ~full) return false;
    for (std::uint32_t b : family)
      if (!has(a | b) || !has(a & b)) return false;
  }
  return true;
}

inline FiniteTopology make_topology(std::vector<std::uint32_t> family, int s) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (!is_topology(family, s)) throw input_error("not a topology on " + std::to_string(s) + " points");
  return FiniteTopology{s, std::move(family)};
}

inline FiniteTopology discrete_topology(int s) {
  std::vector<std::uint32_t> family;
  for (std::uint32_t m = 0; m <= full_mask(s); ++m) family.push_back(m);
  return FiniteTopology{s, std::move(family)};
}

inline FiniteTopology indiscrete_topology(int s) {
  return FiniteTopology{s, {0, full_mask(s)}};
}

// {}, {1}, {0,1} on two points.
inline FiniteTopology sierpinski_topology() { return FiniteTopology{2, {0, 2, 3}}; }

// ---------------------------------------------------------------------------
// Enumeration through the preorder bijection: x <= y iff x lies in every
// open containing y; opens are the down-closed sets and U_y = {x : x <= y}.
// A preorder is stored as its row of minimal neighborhoods U_y, so
// reflexivity is y in U_y and transitivity is (y in U_z => U_y subset U_z).
// ---------------------------------------------------------------------------

inline std::vector<std::uint32_t> specialization_preorder(const FiniteTopology& T) {
  return T.minimal_neighborhoods();
}

inline FiniteTopology topology_from_preorder(const std::vector<std::uint32_t>& U, int s) {
  std::vector<std::uint32_t> opens;
  for (std::uint32_t m = 0; m <= full_mask(s); ++m) {
    bool down_closed = true;
    for (int y = 0; y < s && down_closed; ++y)
      if (m & (1u << y)) down_closed = (U[y] & ~m) == 0;
    if (down_closed) opens.push_back(m);
  }
  return FiniteTopology{s, std::move(opens)};
}

inline std::vector<FiniteTopology> enumerate_topologies(int s, const Limits& limits = {},
                                                        int workers = 1) {
  if (s <= 0) throw input_error("enumerate_topologies: s must be positive");
  if (s > limits.topology_s_max)
    throw cap_error("topology enumeration: s=" + std::to_string(s) + " exceeds cap " +
                    std::to_string(limits.topology_s_max) + " (raise topology_s_max)");

  // Candidate minimal neighborhoods of y: masks containing y.
  std::vector<std::vector<std::uint32_t>> options(s);
  for (int y = 0; y < s; ++y)
    for (std::uint32_t m = 0; m <= full_mask(s); ++m)
      if (m & (1u << y)) options[y].push_back(m);
  const std::uint64_t per_row = options[0].size();  // 2^(s-1)
  std::uint64_t total = 1;
  for (int y = 0; y < s; ++y) total *= per_row;

  auto topologies = exec::parallel_collect<FiniteTopology>(
      total, workers, [&](std::uint64_t idx) -> std::optional<FiniteTopology> {
        std::vector<std::uint32_t> U(s);
        std::uint64_t rest = idx;
        for (int y = s - 1; y >= 0; --y) {
          U[y] = options[y][rest % per_row];
          rest /= per_row;
        }
        for (int z = 0; z < s; ++z)
          for (int y = 0; y < s; ++y)
            if ((U[z] & (1u << y)) && (U[y] & ~U[z])) return std::nullopt;  // not transitive
        return topology_from_preorder(U, s);
      });
  std::sort(topologies.begin(), topologies.end(),
            [](const FiniteTopology& a, const FiniteTopology& b) { return a.opens < b.opens; });
  return topologies;
}

// ---------------------------------------------------------------------------
// Continuity of a finitary operation w.r.t. the product topology, through
// minimal-neighborhood boxes: f is continuous iff
// f(U_{u_1} x ... x U_{u_k}) is contained in U_{f(u)} for every tuple u.
// ---------------------------------------------------------------------------

inline bool is_continuous(const OperationTable& f, const FiniteTopology& T) {
  if (f.s != T.s) throw input_error("is_continuous: carrier size mismatch");
  const int s = T.s, k = f.arity;
  const auto U = T.minimal_neighborhoods();
  std::vector<int> u(k), v(k);
  const std::uint64_t total = checked_pow(s, k, UINT64_MAX);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_tuple(idx, s, k, u);
    const std::uint32_t target = U[f.entries[idx]];
    // odometer over the box of minimal neighborhoods
    std::vector<std::vector<int>> box(k);
    for (int j = 0; j < k; ++j)
      for (int x = 0; x < s; ++x)
        if (U[u[j]] & (1u << x)) box[j].push_back(x);
    std::vector<std::size_t> pos(k, 0);
    while (true) {
      for (int j = 0; j < k; ++j) v[j] = box[j][pos[j]];
      if (!(target & (1u << f.entries[encode_tuple(v, s)]))) return false;
      int j = k - 1;
      for (; j >= 0; --j) {
        if (++pos[j] < box[j].size()) break;
        pos[j] = 0;
      }
      if (j < 0) break;
    }
  }
  return true;
}

inline bool is_compatible(const FiniteAlgebra& A, const FiniteTopology& T) {
  if (!is_continuous(A.theta, T)) return false;
  for (const auto& a : A.alphas)
    if (!is_continuous(a, T)) return false;
  return true;
}

inline std::vector<FiniteTopology> compatible_topologies(const FiniteAlgebra& A,
                                                         const Limits& limits = {},
                                                         int workers = 1) {
  auto all = enumerate_topologies(A.s, limits, workers);
  return exec::parallel_filter(all, workers,
                               [&](const FiniteTopology& T) { return is_compatible(A, T); });
}

// ---------------------------------------------------------------------------
// Separation axioms.  Complete regularity is implemented as clopen
// separation: a continuous map from a finite space to [0,1] has finite
// image, so thresholding yields a clopen separator, and conversely a clopen
// separator's indicator is such a map.
// ---------------------------------------------------------------------------

struct SeparationAxioms {
  bool t0 = false, t1 = false, t2 = false, regular = false, completely_regular = false;

  friend bool operator==(const SeparationAxioms&, const SeparationAxioms&) = default;
};

inline SeparationAxioms sep_axioms(const FiniteTopology& T) {
  const int s = T.s;
  const std::uint32_t full = full_mask(s);
  SeparationAxioms ax;

  ax.t0 = true;
  for (int x = 0; x < s && ax.t0; ++x)
    for (int y = x + 1; y < s && ax.t0; ++y) {
      bool separated = false;
      for (std::uint32_t o : T.opens) {
        bool hx = o & (1u << x), hy = o & (1u << y);
        if (hx != hy) {
          separated = true;
          break;
        }
      }
      ax.t0 = separated;
    }

  ax.t1 = true;
  for (int x = 0; x < s && ax.t1; ++x) ax.t1 = T.contains(full & ~(1u << x));

  ax.t2 = true;
  for (int x = 0; x < s && ax.t2; ++x)
    for (int y = x + 1; y < s && ax.t2; ++y) {
      bool separated = false;
      for (std::uint32_t o1 : T.opens) {
        if (!(o1 & (1u << x))) continue;
        for (std::uint32_t o2 : T.opens)
          if ((o2 & (1u << y)) && !(o1 & o2)) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      ax.t2 = separated;
    }

  std::vector<std::uint32_t> closed;
  for (std::uint32_t o : T.opens) closed.push_back(full & ~o);

  ax.regular = true;
  for (int x = 0; x < s && ax.regular; ++x)
    for (std::uint32_t c : closed) {
      if (c & (1u << x)) continue;
      bool separated = false;
      for (std::uint32_t o1 : T.opens) {
        if (!(o1 & (1u << x))) continue;
        for (std::uint32_t o2 : T.opens)
          if ((c & ~o2) == 0 && !(o1 & o2)) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) {
        ax.regular = false;
        break;
      }
    }

  ax.completely_regular = true;
  for (int x = 0; x < s && ax.completely_regular; ++x)
    for (std::uint32_t c : closed) {
      if (c & (1u << x)) continue;
      bool separated = false;
      for (std::uint32_t k : T.opens)
        if (T.contains(full & ~k) && (k & (1u << x)) && !(k & c)) {
          separated = true;
          break;
        }
      if (!separated) {
        ax.completely_regular = false;
        break;
      }
    }

  return ax;
}

// ---------------------------------------------------------------------------
// Neighborhood bases from the algebra structure: the sets
// intersection_i { b : alpha_i(b, a) in H_i }, H_i an open neighborhood of
// e_i, form a base of neighborhoods of a.
// ---------------------------------------------------------------------------

struct NeighborhoodTuple {
  std::vector<std::uint32_t> H;  // n opens, H_i containing e_i

  friend bool operator==(const NeighborhoodTuple&, const NeighborhoodTuple&) = default;
};

inline void validate_neighborhood_tuple(const FiniteAlgebra& A, const FiniteTopology& T,
                                        const NeighborhoodTuple& H) {
  if (static_cast<int>(H.H.size()) != A.n)
    throw input_error("neighborhood tuple: expected " + std::to_string(A.n) + " opens");
  for (int i = 0; i < A.n; ++i) {
    if (!T.contains(H.H[i]))
      throw input_error("neighborhood tuple: H_" + std::to_string(i + 1) + " is not open");
    if (!(H.H[i] & (1u << A.es[i])))
      throw input_error("neighborhood tuple: H_" + std::to_string(i + 1) +
                        " does not contain e_" + std::to_string(i + 1));
  }
}

inline std::uint32_t neighborhood_base_sets(const FiniteAlgebra& A, const FiniteTopology& T,
                                            int a, const NeighborhoodTuple& H) {
  validate_neighborhood_tuple(A, T, H);
  std::uint32_t result = full_mask(A.s);
  for (int i = 0; i < A.n; ++i) {
    std::uint32_t pre = 0;
    for (int b = 0; b < A.s; ++b)
      if (H.H[i] & (1u << detail::al(A, i, b, a))) pre |= 1u << b;
    result &= pre;
  }
  return result;
}

// All neighborhood tuples of T, in odometer order over each coordinate's
// ascending list of opens containing e_i.
inline std::vector<NeighborhoodTuple> neighborhood_tuples(const FiniteAlgebra& A,
                                                          const FiniteTopology& T) {
  std::vector<std::vector<std::uint32_t>> options(A.n);
  for (int i = 0; i < A.n; ++i)
    for (std::uint32_t o : T.opens)
      if (o & (1u << A.es[i])) options[i].push_back(o);
  std::vector<NeighborhoodTuple> out;
  std::vector<std::size_t> pos(A.n, 0);
  while (true) {
    NeighborhoodTuple H;
    for (int i = 0; i < A.n; ++i) H.H.push_back(options[i][pos[i]]);
    out.push_back(std::move(H));
    int i = A.n - 1;
    for (; i >= 0; --i) {
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// For every a and open O containing a there is an H with
// a in base(a,H) subset O, and every base set is a neighborhood of a.
inline CheckReport check_prop_2_2(const FiniteAlgebra& A, const FiniteTopology& T,
                                  int workers = 1) {
  const std::string name = "prop22";
  (void)workers;
  require_protomodular(A, name);
  if (!is_compatible(A, T)) throw precondition_error(name + ": topology is not compatible");
  auto tuples = neighborhood_tuples(A, T);

  for (int a = 0; a < A.s; ++a) {
    for (std::uint32_t O : T.opens) {
      if (!(O & (1u << a))) continue;
      bool found = false;
      for (const auto& H : tuples) {
        std::uint32_t base = neighborhood_base_sets(A, T, a, H);
        if ((base & (1u << a)) && (base & ~O) == 0) {
          found = true;
          break;
        }
      }
      if (!found) {
        Counterexample ce;
        ce.identity = "(2.6)";
        ce.tuple = {a, static_cast<int>(O)};
        return report_fail(name, std::move(ce), "no base set fits inside the open (mask in tuple)");
      }
    }
    // neighborhood property: each base set contains an open around a
    for (const auto& H : tuples) {
      std::uint32_t base = neighborhood_base_sets(A, T, a, H);
      bool has_open = false;
      for (std::uint32_t O : T.opens)
        if ((O & (1u << a)) && (O & ~base) == 0) {
          has_open = true;
          break;
        }
      if (!has_open) {
        Counterexample ce;
        ce.identity = "(2.6)";
        ce.tuple = {a, static_cast<int>(base)};
        return report_fail(name, std::move(ce), "base set is not a neighborhood (mask in tuple)");
      }
    }
  }
  return report_pass(name);
}

// ---------------------------------------------------------------------------
// T0 => T1 over every compatible topology (lemma41), and
// T0 => completely regular for right-cancellable algebras (theorem42).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string t0_summary(const std::vector<FiniteTopology>& compat,
                              const std::vector<int>& t0_indices) {
  std::string d = "compatible=" + std::to_string(compat.size()) + " t0=[";
  for (std::size_t j = 0; j < t0_indices.size(); ++j) {
    if (j) d += ",";
    d += std::to_string(t0_indices[j]);
  }
  d += "]";
  return d;
}

}  // namespace detail

inline CheckReport check_lemma_4_1(const FiniteAlgebra& A, const Limits& limits = {},
                                   int workers = 1) {
  const std::string name = "lemma41";
  require_protomodular(A, name);
  auto compat = compatible_topologies(A, limits, workers);
  std::vector<int> t0_indices;
  for (std::size_t idx = 0; idx < compat.size(); ++idx) {
    SeparationAxioms ax = sep_axioms(compat[idx]);
    if (!ax.t0) continue;
    t0_indices.push_back(static_cast<int>(idx));
    if (!ax.t1) {
      Counterexample ce;
      ce.identity = "T0=>T1";
      ce.tuple = {static_cast<int>(idx)};
      return report_fail(name, std::move(ce),
                         "compatible topology #" + std::to_string(idx) + " is T0 but not T1");
    }
  }
  return report_pass(name, detail::t0_summary(compat, t0_indices));
}

inline CheckReport check_theorem_4_2(const FiniteAlgebra& A, const Limits& limits = {},
                                     int workers = 1) {
  const std::string name = "theorem42";
  require_protomodular(A, name);
  if (!check_rc_i(A, workers).holds)
    throw precondition_error(name + ": algebra is not right-cancellable ((3.1) fails)");
  auto compat = compatible_topologies(A, limits, workers);
  std::vector<int> t0_indices;
  for (std::size_t idx = 0; idx < compat.size(); ++idx) {
    SeparationAxioms ax = sep_axioms(compat[idx]);
    if (!ax.t0) continue;
    t0_indices.push_back(static_cast<int>(idx));
    if (!ax.completely_regular) {
      Counterexample ce;
      ce.identity = "T0=>T3.5";
      ce.tuple = {static_cast<int>(idx)};
      return report_fail(name, std::move(ce),
                         "compatible topology #" + std::to_string(idx) +
                             " is T0 but not completely regular");
    }
  }
  return report_pass(name, detail::t0_summary(compat, t0_indices));
}

}  // namespace palab
