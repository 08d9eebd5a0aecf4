#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palab/topology.hpp"

namespace palab {

// ---------------------------------------------------------------------------
// Coverings of the carrier by nonempty subsets, with the star operation
// St(M, C) = union of blocks meeting M.
// ---------------------------------------------------------------------------

struct Covering {
  int s = 0;
  std::vector<std::uint32_t> blocks;  // nonempty, deduplicated, sorted ascending

  friend bool operator==(const Covering&, const Covering&) = default;
};

inline Covering make_covering(int s, std::vector<std::uint32_t> blocks) {
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  std::uint32_t uni = 0;
  for (std::uint32_t b : blocks) {
    if (b == 0) throw input_error("covering: empty block");
    if (b & ~full_mask(s)) throw input_error("covering: block outside carrier");
    uni |= b;
  }
  if (uni != full_mask(s)) throw input_error("covering: blocks do not cover the carrier");
  return Covering{s, std::move(blocks)};
}

inline std::uint32_t star(std::uint32_t M, const Covering& C) {
  std::uint32_t st = 0;
  for (std::uint32_t b : C.blocks)
    if (b & M) st |= b;
  return st;
}

// finer is inscribed in coarser: every block of finer lies inside some
// block of coarser.
inline bool is_inscribed(const Covering& finer, const Covering& coarser) {
  for (std::uint32_t a : finer.blocks) {
    bool inside = false;
    for (std::uint32_t b : coarser.blocks)
      if ((a & ~b) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

// B is strongly star-like inscribed in A: for every block b of B, St(b,B)
// lies inside some block of A.
inline bool is_strong_star_inscribed(const Covering& B, const Covering& A) {
  for (std::uint32_t b : B.blocks) {
    std::uint32_t st = star(b, B);
    bool inside = false;
    for (std::uint32_t a : A.blocks)
      if ((st & ~a) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

// The covering C_H: one block per point a, namely the neighborhood-base set
// of a for the tuple H.  Under (2.1) every point lies in its own block.
inline Covering covering_CH(const FiniteAlgebra& A, const FiniteTopology& T,
                            const NeighborhoodTuple& H) {
  std::vector<std::uint32_t> blocks;
  for (int a = 0; a < A.s; ++a) blocks.push_back(neighborhood_base_sets(A, T, a, H));
  return make_covering(A.s, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Entourages and the induced topology.
// ---------------------------------------------------------------------------

struct Relation {
  int s = 0;
  std::vector<std::uint32_t> rows;  // rows[x] = { y : (x,y) in R }

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct EntourageBase {
  std::vector<Relation> relations;
};

// Union of block x block over the covering's blocks.
inline Relation entourage(const Covering& C) {
  Relation R{C.s, std::vector<std::uint32_t>(C.s, 0)};
  for (std::uint32_t b : C.blocks)
    for (int x = 0; x < C.s; ++x)
      if (b & (1u << x)) R.rows[x] |= b;
  return R;
}

inline std::uint32_t ball(int x, const Relation& R) {
  if (x < 0 || x >= R.s) throw input_error("ball: point out of range");
  return R.rows[x];
}

inline EntourageBase entourage_base(const std::vector<Covering>& generators) {
  EntourageBase base;
  for (const auto& C : generators) base.relations.push_back(entourage(C));
  return base;
}

// O is open iff every x in O has a generator whose ball around x stays in
// O.  The result is checked to be a topology.
inline FiniteTopology induced_topology(const std::vector<Covering>& generators) {
  if (generators.empty()) throw input_error("induced_topology: no generators");
  const int s = generators.front().s;
  for (const auto& C : generators)
    if (C.s != s) throw input_error("induced_topology: carrier size mismatch");
  if (s > 20) throw input_error("induced_topology: carrier too large");
  std::vector<std::uint32_t> opens;
  for (std::uint32_t O = 0; O <= full_mask(s); ++O) {
    bool open = true;
    for (int x = 0; x < s && open; ++x) {
      if (!(O & (1u << x))) continue;
      bool witnessed = false;
      for (const auto& C : generators)
        if ((star(1u << x, C) & ~O) == 0) {
          witnessed = true;
          break;
        }
      open = witnessed;
    }
    if (open) opens.push_back(O);
  }
  if (!is_topology(opens, s))
    throw std::logic_error("induced_topology: generator family does not induce a topology");
  return FiniteTopology{s, std::move(opens)};
}

// ---------------------------------------------------------------------------
// Star refinement.  The primary route searches neighborhood tuples by
// increasing total size; the constructive route follows the continuity
// argument: all T_i terms map the box of minimal neighborhoods of
// (e,...,e) into U_{e_i}, so H'_j is the minimal neighborhood of e_j.
// ---------------------------------------------------------------------------

inline std::vector<NeighborhoodTuple> neighborhood_tuples_by_size(const FiniteAlgebra& A,
                                                                  const FiniteTopology& T) {
  auto tuples = neighborhood_tuples(A, T);
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const NeighborhoodTuple& a, const NeighborhoodTuple& b) {
                     int sa = 0, sb = 0;
                     for (std::uint32_t m : a.H) sa += std::popcount(m);
                     for (std::uint32_t m : b.H) sb += std::popcount(m);
                     return sa < sb;
                   });
  return tuples;
}

inline std::optional<NeighborhoodTuple> search_star_refinement(const FiniteAlgebra& A,
                                                               const FiniteTopology& T,
                                                               const NeighborhoodTuple& H) {
  const Covering CH = covering_CH(A, T, H);
  for (const auto& Hp : neighborhood_tuples_by_size(A, T))
    if (is_strong_star_inscribed(covering_CH(A, T, Hp), CH)) return Hp;
  return std::nullopt;
}

inline NeighborhoodTuple construct_star_refinement(const FiniteAlgebra& A,
                                                   const FiniteTopology& T,
                                                   const NeighborhoodTuple& H,
                                                   TiRoute route = TiRoute::via_ii) {
  validate_neighborhood_tuple(A, T, H);
  auto [tables, witness] = derive_Ti(A, route);
  if (!witness.holds)
    throw std::logic_error("construct_star_refinement: term witness verification failed");
  const auto U = T.minimal_neighborhoods();
  const int n = A.n, s = A.s;

  // (4.2) with every box coordinate shrunk to the minimal neighborhood of
  // the matching e_j: verify T_i(box) is inside H_i.
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> box(3 * n);
    for (int q = 0; q < 3 * n; ++q)
      for (int x = 0; x < s; ++x)
        if (U[A.es[q % n]] & (1u << x)) box[q].push_back(x);
    std::vector<std::size_t> pos(3 * n, 0);
    std::vector<int> args(3 * n);
    while (true) {
      for (int q = 0; q < 3 * n; ++q) args[q] = box[q][pos[q]];
      if (!(H.H[i] & (1u << eval(tables.T[i], args))))
        throw std::logic_error("construct_star_refinement: (4.2) fails on minimal neighborhoods");
      int q = 3 * n - 1;
      for (; q >= 0; --q) {
        if (++pos[q] < box[q].size()) break;
        pos[q] = 0;
      }
      if (q < 0) break;
    }
  }

  // (4.3): intersect the chosen neighborhoods per coordinate group; with
  // the minimal choice this is just U_{e_j}.
  NeighborhoodTuple Hp;
  for (int j = 0; j < n; ++j) Hp.H.push_back(U[A.es[j]]);
  validate_neighborhood_tuple(A, T, Hp);
  return Hp;
}

// Requires a right-cancellable algebra and a compatible T0 topology; the
// search must then succeed, and both routes must verify.
inline NeighborhoodTuple find_star_refinement(const FiniteAlgebra& A, const FiniteTopology& T,
                                              const NeighborhoodTuple& H, int workers = 1) {
  const std::string name = "find_star_refinement";
  if (!check_rc_i(A, workers).holds)
    throw precondition_error(name + ": algebra is not right-cancellable ((3.1) fails)");
  if (!is_compatible(A, T)) throw precondition_error(name + ": topology is not compatible");
  if (!sep_axioms(T).t0) throw precondition_error(name + ": topology is not T0");
  validate_neighborhood_tuple(A, T, H);

  auto found = search_star_refinement(A, T, H);
  if (!found) throw std::logic_error(name + ": search exhausted despite preconditions");

  const Covering CH = covering_CH(A, T, H);
  NeighborhoodTuple constructed = construct_star_refinement(A, T, H);
  if (!is_strong_star_inscribed(covering_CH(A, T, constructed), CH))
    throw std::logic_error(name + ": constructive route is not strongly star-inscribed");
  return *found;
}

// ---------------------------------------------------------------------------
// Conditions (C1)-(C4) over the generator set { C_H : H a neighborhood
// tuple }.  The family determining the uniformity is the upward closure of
// the generators, so (C1) holds by representation; (C2) is witnessed by the
// componentwise intersection tuple; (C3) by star-refinement search; (C4)
// fails exactly on non-T0 topologies.
// ---------------------------------------------------------------------------

struct GeneratorSet {
  std::vector<NeighborhoodTuple> tuples;  // first tuple per distinct covering
  std::vector<Covering> coverings;
};

inline GeneratorSet generator_coverings(const FiniteAlgebra& A, const FiniteTopology& T) {
  GeneratorSet g;
  for (const auto& H : neighborhood_tuples(A, T)) {
    Covering C = covering_CH(A, T, H);
    if (std::find(g.coverings.begin(), g.coverings.end(), C) == g.coverings.end()) {
      g.tuples.push_back(H);
      g.coverings.push_back(std::move(C));
    }
  }
  return g;
}

inline CheckReport verify_C_conditions(const FiniteAlgebra& A, const FiniteTopology& T,
                                       int workers = 1) {
  (void)workers;
  const std::string name = "c-conditions";
  require_protomodular(A, name);
  if (!is_compatible(A, T)) throw precondition_error(name + ": topology is not compatible");

  GeneratorSet g = generator_coverings(A, T);
  const int ng = static_cast<int>(g.coverings.size());
  std::string detail = "generators=" + std::to_string(ng) + " C1=by-construction";

  // (C2)
  for (int j1 = 0; j1 < ng; ++j1)
    for (int j2 = 0; j2 < ng; ++j2) {
      NeighborhoodTuple meet;
      for (int i = 0; i < A.n; ++i) meet.H.push_back(g.tuples[j1].H[i] & g.tuples[j2].H[i]);
      Covering C = covering_CH(A, T, meet);
      if (!is_inscribed(C, g.coverings[j1]) || !is_inscribed(C, g.coverings[j2])) {
        Counterexample ce;
        ce.identity = "(C2)";
        ce.tuple = {j1, j2};
        return report_fail(name, std::move(ce), detail + " C2=fail");
      }
    }
  detail += " C2=ok";

  // (C3)
  for (int j = 0; j < ng; ++j) {
    if (!search_star_refinement(A, T, g.tuples[j])) {
      Counterexample ce;
      ce.identity = "(C3)";
      ce.tuple = {j};
      return report_fail(name, std::move(ce), detail + " C3=fail");
    }
  }
  detail += " C3=ok";

  // (C4)
  for (int x = 0; x < A.s; ++x)
    for (int y = x + 1; y < A.s; ++y) {
      const std::uint32_t pair = (1u << x) | (1u << y);
      bool separated = false;
      for (const auto& C : g.coverings) {
        bool has_both = false;
        for (std::uint32_t b : C.blocks)
          if ((pair & ~b) == 0) {
            has_both = true;
            break;
          }
        if (!has_both) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        Counterexample ce;
        ce.identity = "(C4)";
        ce.tuple = {x, y};
        return report_fail(name, std::move(ce),
                           detail + " C4=fail (no generator separates the pair)");
      }
    }
  detail += " C4=ok";
  return report_pass(name, detail);
}

// ---------------------------------------------------------------------------
// The topology induced by the uniformity base equals the original topology.
// ---------------------------------------------------------------------------

inline CheckReport check_lemma_4_4(const FiniteAlgebra& A, const FiniteTopology& T,
                                   int workers = 1) {
  const std::string name = "lemma44";
  if (!check_rc_i(A, workers).holds)
    throw precondition_error(name + ": algebra is not right-cancellable ((3.1) fails)");
  if (!is_compatible(A, T)) throw precondition_error(name + ": topology is not compatible");
  if (!sep_axioms(T).t0) throw precondition_error(name + ": topology is not T0");

  GeneratorSet g = generator_coverings(A, T);
  FiniteTopology tau_prime = induced_topology(g.coverings);
  if (tau_prime.opens == T.opens) return report_pass(name, "tau' = tau");

  std::string diff = "missing=[";
  bool first = true;
  for (std::uint32_t o : T.opens)
    if (!tau_prime.contains(o)) {
      if (!first) diff += ",";
      diff += std::to_string(o);
      first = false;
    }
  diff += "] extra=[";
  first = true;
  for (std::uint32_t o : tau_prime.opens)
    if (!T.contains(o)) {
      if (!first) diff += ",";
      diff += std::to_string(o);
      first = false;
    }
  diff += "]";
  Counterexample ce;
  ce.identity = "tau'=tau";
  std::uint32_t witness = 0;
  bool got = false;
  for (std::uint32_t o : T.opens)
    if (!tau_prime.contains(o)) {
      witness = o;
      got = true;
      break;
    }
  if (!got)
    for (std::uint32_t o : tau_prime.opens)
      if (!T.contains(o)) {
        witness = o;
        break;
      }
  ce.tuple = {static_cast<int>(witness)};
  return report_fail(name, std::move(ce), diff);
}

}  // namespace palab
