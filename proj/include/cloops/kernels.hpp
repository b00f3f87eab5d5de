#pragma once

#include <array>
#include <atomic>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cloops {

/// Execution policy for the exhaustive quantifier kernels. Auto picks the
/// parallel path for tables large enough to amortize the thread fork.
enum class Exec { Auto, Serial, Parallel };

namespace kernels {

constexpr int kParallelThreshold = 24;

/// Lexicographically-first (x,y,z) with viol(x,y,z), or nullopt.
template <class V>
std::optional<std::array<int, 3>> first_triple_serial(int n, V&& viol) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (viol(x, y, z)) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

/// Parallel over the outer index; within each x the scan is in order and stops
/// at the first hit, so the reduction over x reproduces the serial witness.
template <class V>
std::optional<std::array<int, 3>> first_triple_parallel(int n, V&& viol) {
#ifndef _OPENMP
  return first_triple_serial(n, std::forward<V>(viol));
#else
  std::atomic<int> best_x{n};
  std::array<int, 3> best{n, 0, 0};
#pragma omp parallel
  {
    std::array<int, 3> local{n, 0, 0};
#pragma omp for schedule(dynamic) nowait
    for (int x = 0; x < n; ++x) {
      if (x >= best_x.load(std::memory_order_relaxed)) continue;
      bool hit = false;
      for (int y = 0; y < n && !hit; ++y)
        for (int z = 0; z < n && !hit; ++z)
          if (viol(x, y, z)) {
            hit = true;
            if (x < local[0]) local = {x, y, z};
            int cur = best_x.load(std::memory_order_relaxed);
            while (x < cur && !best_x.compare_exchange_weak(cur, x)) {
            }
          }
    }
#pragma omp critical(cloops_first_triple)
    if (local[0] < best[0]) best = local;
  }
  if (best[0] < n) return best;
  return std::nullopt;
#endif
}

template <class V>
std::optional<std::array<int, 3>> first_triple(int n, V&& viol, Exec exec = Exec::Auto) {
  switch (exec) {
    case Exec::Serial:
      return first_triple_serial(n, std::forward<V>(viol));
    case Exec::Parallel:
      return first_triple_parallel(n, std::forward<V>(viol));
    case Exec::Auto:
    default:
      if (n >= kParallelThreshold) return first_triple_parallel(n, std::forward<V>(viol));
      return first_triple_serial(n, std::forward<V>(viol));
  }
}

template <class V>
std::optional<std::array<int, 2>> first_pair_serial(int n, V&& viol) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (viol(x, y)) return std::array<int, 2>{x, y};
  return std::nullopt;
}

template <class V>
std::optional<std::array<int, 2>> first_pair_parallel(int n, V&& viol) {
#ifndef _OPENMP
  return first_pair_serial(n, std::forward<V>(viol));
#else
  std::atomic<int> best_x{n};
  std::array<int, 2> best{n, 0};
#pragma omp parallel
  {
    std::array<int, 2> local{n, 0};
#pragma omp for schedule(dynamic) nowait
    for (int x = 0; x < n; ++x) {
      if (x >= best_x.load(std::memory_order_relaxed)) continue;
      for (int y = 0; y < n; ++y)
        if (viol(x, y)) {
          if (x < local[0]) local = {x, y};
          int cur = best_x.load(std::memory_order_relaxed);
          while (x < cur && !best_x.compare_exchange_weak(cur, x)) {
          }
          break;
        }
    }
#pragma omp critical(cloops_first_pair)
    if (local[0] < best[0]) best = local;
  }
  if (best[0] < n) return best;
  return std::nullopt;
#endif
}

template <class V>
std::optional<std::array<int, 2>> first_pair(int n, V&& viol, Exec exec = Exec::Auto) {
  switch (exec) {
    case Exec::Serial:
      return first_pair_serial(n, std::forward<V>(viol));
    case Exec::Parallel:
      return first_pair_parallel(n, std::forward<V>(viol));
    case Exec::Auto:
    default:
      if (n >= kParallelThreshold) return first_pair_parallel(n, std::forward<V>(viol));
      return first_pair_serial(n, std::forward<V>(viol));
  }
}

/// Membership filter: keep(i) evaluated for all i in 0..n-1, order preserved.
template <class P>
std::vector<int> filter_indices(int n, P&& keep, Exec exec = Exec::Auto) {
#ifdef _OPENMP
  if (exec == Exec::Parallel || (exec == Exec::Auto && n >= kParallelThreshold)) {
    std::vector<char> in(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) in[i] = keep(i) ? 1 : 0;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (in[i]) out.push_back(i);
    return out;
  }
#else
  (void)exec;
#endif
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (keep(i)) out.push_back(i);
  return out;
}

}  // namespace kernels
}  // namespace cloops
