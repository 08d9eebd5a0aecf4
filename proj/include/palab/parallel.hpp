#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace palab::exec {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Least index in [0, total) where pred(i) is true, or nullopt.  The index
// space is split into contiguous chunks, one per worker; each worker scans
// its chunk in ascending order and stops once some chunk before it already
// holds the running minimum, so the result is the global minimum for any
// worker count.
template <class Pred>
std::optional<std::uint64_t> min_index_where(std::uint64_t total, int workers, Pred&& pred) {
  workers = resolve_workers(workers);
  if (total == 0) return std::nullopt;
  if (workers <= 1 || total < 1024) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }

  constexpr std::uint64_t kNone = UINT64_MAX;
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t nchunks = static_cast<std::uint64_t>(workers);
  const std::uint64_t chunk = (total + nchunks - 1) / nchunks;

  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      if ((i & 0x3ff) == 0 && best.load(std::memory_order_relaxed) < lo) return;
      if (pred(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < nchunks; ++w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = lo + chunk < total ? lo + chunk : total;
    if (lo >= hi) break;
    pool.emplace_back(run, lo, hi);
  }
  for (auto& t : pool) t.join();

  std::uint64_t r = best.load();
  if (r == kNone) return std::nullopt;
  return r;
}

// Order-preserving parallel filter.
template <class T, class Pred>
std::vector<T> parallel_filter(const std::vector<T>& items, int workers, Pred&& pred) {
  workers = resolve_workers(workers);
  const std::size_t total = items.size();
  std::vector<char> keep(total, 0);
  if (workers <= 1 || total < 64) {
    for (std::size_t i = 0; i < total; ++i) keep[i] = pred(items[i]) ? 1 : 0;
  } else {
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = static_cast<std::size_t>(w) * chunk;
      std::size_t hi = lo + chunk < total ? lo + chunk : total;
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) keep[i] = pred(items[i]) ? 1 : 0;
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < total; ++i)
    if (keep[i]) out.push_back(items[i]);
  return out;
}

// Evaluate gen(i) for i in [0, total) and concatenate the hits in index
// order.  Chunks are merged in chunk order, so the output is independent of
// the worker count.
template <class T, class Gen>
std::vector<T> parallel_collect(std::uint64_t total, int workers, Gen&& gen) {
  workers = resolve_workers(workers);
  if (workers <= 1 || total < 64) {
    std::vector<T> out;
    for (std::uint64_t i = 0; i < total; ++i)
      if (auto v = gen(i)) out.push_back(std::move(*v));
    return out;
  }
  const std::uint64_t nchunks = static_cast<std::uint64_t>(workers);
  const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
  std::vector<std::vector<T>> parts(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
    std::uint64_t hi = lo + chunk < total ? lo + chunk : total;
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      for (std::uint64_t i = lo; i < hi; ++i)
        if (auto v = gen(i)) parts[w].push_back(std::move(*v));
    });
  }
  for (auto& t : pool) t.join();
  std::vector<T> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  return out;
}

}  // namespace palab::exec
