#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "palab/errors.hpp"
#include "palab/limits.hpp"

namespace palab {

// ---------------------------------------------------------------------------
// Flat tuple encoding.  Everywhere in this library a k-tuple (x_1,...,x_k)
// over carrier {0..s-1} is flattened to sum x_j * s^(k-1-j): the FIRST
// argument is the MOST significant digit.  Ascending flat index therefore
// equals lexicographic tuple order, which is what makes "least
// counterexample" well defined.
// ---------------------------------------------------------------------------

inline std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

inline void decode_tuple(std::uint64_t index, int s, int k, std::span<int> out) {
  for (int j = k - 1; j >= 0; --j) {
    out[j] = static_cast<int>(index % static_cast<std::uint64_t>(s));
    index /= static_cast<std::uint64_t>(s);
  }
}

inline std::uint64_t encode_tuple(std::span<const int> args, int s) {
  std::uint64_t index = 0;
  for (int a : args) index = index * static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(a);
  return index;
}

// ---------------------------------------------------------------------------
// Operation tables
// ---------------------------------------------------------------------------

struct OperationTable {
  int arity = 0;
  int s = 0;                 // carrier size
  std::vector<int> entries;  // s^arity values, each in [0, s)

  friend bool operator==(const OperationTable&, const OperationTable&) = default;
};

inline std::size_t table_size(int s, int arity, const Limits& limits = {}) {
  if (s <= 0) throw input_error("carrier size must be positive");
  if (arity < 0) throw input_error("arity must be non-negative");
  std::uint64_t size = checked_pow(static_cast<std::uint64_t>(s), arity, limits.table_entry_max);
  if (size > limits.table_entry_max)
    throw cap_error("table with s=" + std::to_string(s) + " arity=" + std::to_string(arity) +
                    " exceeds entry cap " + std::to_string(limits.table_entry_max));
  return static_cast<std::size_t>(size);
}

inline OperationTable make_table(int arity, int s, std::vector<int> entries,
                                 const Limits& limits = {}) {
  std::size_t want = table_size(s, arity, limits);
  if (entries.size() != want)
    throw input_error("table entries: expected " + std::to_string(want) + " values, got " +
                      std::to_string(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] < 0 || entries[i] >= s)
      throw input_error("table entries[" + std::to_string(i) + "]=" + std::to_string(entries[i]) +
                        " out of range [0," + std::to_string(s) + ")");
  return OperationTable{arity, s, std::move(entries)};
}

inline int eval(const OperationTable& table, std::span<const int> args) {
  if (static_cast<int>(args.size()) != table.arity)
    throw input_error("eval: expected " + std::to_string(table.arity) + " arguments, got " +
                      std::to_string(args.size()));
  for (int a : args)
    if (a < 0 || a >= table.s)
      throw input_error("eval: argument " + std::to_string(a) + " out of range [0," +
                        std::to_string(table.s) + ")");
  return table.entries[encode_tuple(args, table.s)];
}

inline int eval(const OperationTable& table, std::initializer_list<int> args) {
  return eval(table, std::span<const int>(args.begin(), args.size()));
}

// ---------------------------------------------------------------------------
// Finite algebras in the protomodular signature: one (n+1)-ary theta,
// n binary alphas, n constants.
// ---------------------------------------------------------------------------

struct FiniteAlgebra {
  int s = 0;
  int n = 0;
  OperationTable theta;
  std::vector<OperationTable> alphas;
  std::vector<int> es;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

// Concatenated table key used for canonical ordering: theta entries, then
// each alpha's entries, then the constants.
inline std::vector<int> algebra_key(const FiniteAlgebra& A) {
  std::vector<int> key;
  key.reserve(A.theta.entries.size() + A.alphas.size() * A.theta.s * A.theta.s + A.es.size());
  key.insert(key.end(), A.theta.entries.begin(), A.theta.entries.end());
  for (const auto& a : A.alphas) key.insert(key.end(), a.entries.begin(), a.entries.end());
  key.insert(key.end(), A.es.begin(), A.es.end());
  return key;
}

inline bool algebra_less(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  if (A.s != B.s) return A.s < B.s;
  if (A.n != B.n) return A.n < B.n;
  return algebra_key(A) < algebra_key(B);
}

// Validates shapes and ranges only; the identities (2.1)/(2.2) are the
// checks module's job.
inline FiniteAlgebra make_algebra(int s, int n, std::vector<int> theta,
                                  std::vector<std::vector<int>> alphas, std::vector<int> es,
                                  const Limits& limits = {}) {
  if (s <= 0) throw input_error("s: carrier size must be positive");
  if (n < 1) throw input_error("n: signature parameter must be at least 1");
  FiniteAlgebra A;
  A.s = s;
  A.n = n;
  try {
    A.theta = make_table(n + 1, s, std::move(theta), limits);
  } catch (const input_error& e) {
    throw input_error(std::string("theta: ") + e.what());
  }
  if (static_cast<int>(alphas.size()) != n)
    throw input_error("alphas: expected " + std::to_string(n) + " tables, got " +
                      std::to_string(alphas.size()));
  for (int i = 0; i < n; ++i) {
    try {
      A.alphas.push_back(make_table(2, s, std::move(alphas[i]), limits));
    } catch (const input_error& e) {
      throw input_error("alphas[" + std::to_string(i) + "]: " + e.what());
    }
  }
  if (static_cast<int>(es.size()) != n)
    throw input_error("es: expected " + std::to_string(n) + " constants, got " +
                      std::to_string(es.size()));
  for (int i = 0; i < n; ++i)
    if (es[i] < 0 || es[i] >= s)
      throw input_error("es[" + std::to_string(i) + "]=" + std::to_string(es[i]) +
                        " out of range [0," + std::to_string(s) + ")");
  A.es = std::move(es);
  return A;
}

inline void validate_algebra(const FiniteAlgebra& A, const Limits& limits = {}) {
  std::vector<std::vector<int>> alpha_entries;
  for (const auto& a : A.alphas) alpha_entries.push_back(a.entries);
  FiniteAlgebra copy = make_algebra(A.s, A.n, A.theta.entries, std::move(alpha_entries), A.es, limits);
  if (A.theta.arity != A.n + 1) throw input_error("theta: arity must be n+1");
  for (const auto& a : A.alphas)
    if (a.arity != 2) throw input_error("alphas: arity must be 2");
  (void)copy;
}

// ---------------------------------------------------------------------------
// Direct power: carrier {0..s^k-1}, componentwise operations.  Element
// encoding matches the tuple convention above: (x_1,...,x_k) with x_1 most
// significant.
// ---------------------------------------------------------------------------

inline FiniteAlgebra power(const FiniteAlgebra& A, int k, const Limits& limits = {}) {
  if (k < 1) throw input_error("power: exponent must be positive");
  std::uint64_t ps64 = checked_pow(static_cast<std::uint64_t>(A.s), k, limits.table_entry_max);
  if (ps64 > limits.table_entry_max)
    throw cap_error("power: carrier size s^k exceeds cap");
  const int ps = static_cast<int>(ps64);
  (void)table_size(ps, A.n + 1, limits);  // reject before materializing

  auto lift = [&](const OperationTable& f) {
    const int arity = f.arity;
    std::size_t total = table_size(ps, arity, limits);
    std::vector<int> entries(total);
    std::vector<int> args(arity), coords(arity), out(k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode_tuple(idx, ps, arity, args);
      for (int c = 0; c < k; ++c) {
        // c-th coordinate of every argument
        for (int j = 0; j < arity; ++j) {
          std::uint64_t rest = static_cast<std::uint64_t>(args[j]);
          int shift = k - 1 - c;
          for (int t = 0; t < shift; ++t) rest /= static_cast<std::uint64_t>(A.s);
          coords[j] = static_cast<int>(rest % static_cast<std::uint64_t>(A.s));
        }
        out[c] = f.entries[encode_tuple(std::span<const int>(coords.data(), arity), A.s)];
      }
      entries[idx] = static_cast<int>(encode_tuple(out, A.s));
    }
    return OperationTable{arity, ps, std::move(entries)};
  };

  FiniteAlgebra P;
  P.s = ps;
  P.n = A.n;
  P.theta = lift(A.theta);
  for (const auto& a : A.alphas) P.alphas.push_back(lift(a));
  for (int e : A.es) {
    std::vector<int> coords(k, e);
    P.es.push_back(static_cast<int>(encode_tuple(coords, A.s)));
  }
  return P;
}

// ---------------------------------------------------------------------------
// Congruences.  block_of assigns each element a block id, normalized by
// first occurrence (a restricted growth string), so each partition has a
// unique representation.
// ---------------------------------------------------------------------------

struct Congruence {
  std::vector<int> block_of;

  int num_blocks() const {
    return block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;
  }
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

inline Congruence normalize_partition(std::span<const int> raw) {
  Congruence R;
  R.block_of.assign(raw.size(), -1);
  std::vector<int> relabel(raw.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int b = raw[i];
    if (b < 0 || b >= static_cast<int>(raw.size()))
      throw input_error("block_of: block id out of range");
    if (relabel[b] == -1) relabel[b] = next++;
    R.block_of[i] = relabel[b];
  }
  return R;
}

// Compatibility via single-coordinate replacement, which is equivalent to
// the all-tuples definition for finitary operations.
inline bool is_congruence(const FiniteAlgebra& A, const Congruence& R) {
  if (static_cast<int>(R.block_of.size()) != A.s) return false;
  auto compatible = [&](const OperationTable& f) {
    const int arity = f.arity;
    if (arity == 0) return true;
    std::vector<int> args(arity);
    const std::uint64_t ctx_total = checked_pow(A.s, arity - 1, UINT64_MAX);
    std::vector<int> ctx(arity - 1);
    for (int x = 0; x < A.s; ++x)
      for (int y = x + 1; y < A.s; ++y) {
        if (R.block_of[x] != R.block_of[y]) continue;
        for (int pos = 0; pos < arity; ++pos)
          for (std::uint64_t c = 0; c < ctx_total; ++c) {
            decode_tuple(c, A.s, arity - 1, ctx);
            int at = 0;
            for (int j = 0; j < arity; ++j) args[j] = (j == pos) ? x : ctx[at++];
            int fx = f.entries[encode_tuple(args, A.s)];
            args[pos] = y;
            int fy = f.entries[encode_tuple(args, A.s)];
            if (R.block_of[fx] != R.block_of[fy]) return false;
          }
      }
    return true;
  };
  if (!compatible(A.theta)) return false;
  for (const auto& a : A.alphas)
    if (!compatible(a)) return false;
  return true;
}

// All congruences, in ascending lexicographic order of block_of arrays.
// Partitions are generated as restricted growth strings, so the one-block
// partition comes first and the identity partition last.
inline std::vector<Congruence> enumerate_congruences(const FiniteAlgebra& A,
                                                     const Limits& limits = {}) {
  if (A.s > limits.congruence_s_max)
    throw cap_error("congruence enumeration: s=" + std::to_string(A.s) + " exceeds cap " +
                    std::to_string(limits.congruence_s_max));
  std::vector<Congruence> out;
  std::vector<int> rgs(A.s, 0);
  while (true) {
    Congruence R{rgs};
    if (is_congruence(A, R)) out.push_back(std::move(R));
    // next restricted growth string in lexicographic order
    int i = A.s - 1;
    for (; i > 0; --i) {
      int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

inline FiniteAlgebra quotient(const FiniteAlgebra& A, const Congruence& R) {
  if (static_cast<int>(R.block_of.size()) != A.s)
    throw input_error("quotient: block_of length does not match carrier");
  if (normalize_partition(R.block_of) != R)
    throw input_error("quotient: block ids are not normalized by first occurrence");
  if (!is_congruence(A, R)) throw input_error("quotient: relation is not a congruence");

  const int qs = R.num_blocks();
  std::vector<int> rep(qs, -1);
  for (int x = 0; x < A.s; ++x)
    if (rep[R.block_of[x]] == -1) rep[R.block_of[x]] = x;

  auto induce = [&](const OperationTable& f) {
    const int arity = f.arity;
    std::size_t total = table_size(qs, arity);
    std::vector<int> entries(total);
    std::vector<int> qargs(arity), args(arity);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode_tuple(idx, qs, arity, qargs);
      for (int j = 0; j < arity; ++j) args[j] = rep[qargs[j]];
      entries[idx] = R.block_of[f.entries[encode_tuple(args, A.s)]];
    }
    return OperationTable{arity, qs, std::move(entries)};
  };

  FiniteAlgebra Q;
  Q.s = qs;
  Q.n = A.n;
  Q.theta = induce(A.theta);
  for (const auto& a : A.alphas) Q.alphas.push_back(induce(a));
  for (int e : A.es) Q.es.push_back(R.block_of[e]);
  return Q;
}

// ---------------------------------------------------------------------------
// Canonical form under carrier relabeling.
// ---------------------------------------------------------------------------

// perm maps old labels to new labels.
inline FiniteAlgebra relabel(const FiniteAlgebra& A, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != A.s) throw input_error("relabel: permutation size mismatch");
  std::vector<int> inv(A.s, -1);
  for (int x = 0; x < A.s; ++x) {
    if (perm[x] < 0 || perm[x] >= A.s || inv[perm[x]] != -1)
      throw input_error("relabel: not a permutation");
    inv[perm[x]] = x;
  }
  auto map_table = [&](const OperationTable& f) {
    const int arity = f.arity;
    std::vector<int> entries(f.entries.size());
    std::vector<int> nargs(arity), oargs(arity);
    for (std::uint64_t idx = 0; idx < f.entries.size(); ++idx) {
      decode_tuple(idx, A.s, arity, nargs);
      for (int j = 0; j < arity; ++j) oargs[j] = inv[nargs[j]];
      entries[idx] = perm[f.entries[encode_tuple(oargs, A.s)]];
    }
    return OperationTable{arity, A.s, std::move(entries)};
  };
  FiniteAlgebra B;
  B.s = A.s;
  B.n = A.n;
  B.theta = map_table(A.theta);
  for (const auto& a : A.alphas) B.alphas.push_back(map_table(a));
  for (int e : A.es) B.es.push_back(perm[e]);
  return B;
}

// Lexicographically least relabeling of A; constant on relabeling orbits
// and idempotent.
inline FiniteAlgebra canonical_form(const FiniteAlgebra& A) {
  std::vector<int> perm(A.s);
  std::iota(perm.begin(), perm.end(), 0);
  FiniteAlgebra best = A;
  std::vector<int> best_key = algebra_key(best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    FiniteAlgebra cand = relabel(A, perm);
    std::vector<int> key = algebra_key(cand);
    if (key < best_key) {
      best = std::move(cand);
      best_key = std::move(key);
    }
  }
  return best;
}

}  // namespace palab
