#include "cycledepth/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cycledepth/errors.hpp"
#include "cycledepth/vertex_set.hpp"

namespace cycledepth {
namespace {

int checked_size(const Graph& g, int limit) {
  if (limit < 1) throw precondition_error("treewidth limit must be at least 1");
  const int effective = std::min(limit, kTreewidthHardLimit);
  if (g.vertex_count() > effective)
    throw size_limit_error("treewidth", g.vertex_count(), effective);
  return g.vertex_count();
}

std::uint64_t component_of(const Graph& g, std::uint64_t s, int seed) {
  std::uint64_t comp = std::uint64_t{1} << seed;
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= g.neighbor_mask(std::countr_zero(m));
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

// Width of v when eliminated after the set s: neighbours of v's component in
// G[s + v] outside the component (those are never in s, so no extra mask).
int q_value(const Graph& g, std::uint64_t s, int v) {
  std::uint64_t comp = component_of(g, s | (std::uint64_t{1} << v), v);
  std::uint64_t nb = 0;
  for (std::uint64_t m = comp; m; m &= m - 1)
    nb |= g.neighbor_mask(std::countr_zero(m));
  return std::popcount(nb & ~comp);
}

struct SerialSolver {
  const Graph& g;
  std::vector<std::int8_t> memo;  // -2 = unsolved; values are >= -1

  int solve(std::uint64_t s) {
    if (s == 0) return -1;
    if (memo[s] != -2) return memo[s];
    int best = g.vertex_count();  // Q never exceeds n - 1
    for (std::uint64_t m = s; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
      const int q = q_value(g, rest, v);
      if (q >= best) continue;  // max(.., q) cannot improve
      best = std::min(best, std::max(solve(rest), q));
    }
    memo[s] = static_cast<std::int8_t>(best);
    return best;
  }
};

}  // namespace

int treewidth_exact_serial(const Graph& g, int limit) {
  const int n = checked_size(g, limit);
  if (n == 0) return -1;
  SerialSolver solver{g, std::vector<std::int8_t>(std::size_t{1} << n, -2)};
  return solver.solve(low_bits(n));
}

int treewidth_exact_parallel(const Graph& g, int limit, int threads) {
  const int n = checked_size(g, limit);
  if (n == 0) return -1;
  const std::uint64_t full = low_bits(n);
  std::vector<std::int8_t> table(std::size_t{1} << n, 0);
  table[0] = -1;
#ifndef _OPENMP
  (void)threads;
#endif

  std::vector<std::uint64_t> layer;
  for (int k = 1; k <= n; ++k) {
    layer.clear();
    for (std::uint64_t s = low_bits(k); s <= full; ) {
      layer.push_back(s);
      if (s == full) break;
      // Gosper's hack: next k-subset in increasing numeric order.
      std::uint64_t c = s & -s;
      std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
    const auto count = static_cast<std::int64_t>(layer.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < count; ++i) {
      const std::uint64_t s = layer[i];
      int best = n;
      for (std::uint64_t m = s; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
        const int q = q_value(g, rest, v);
        if (q >= best) continue;
        best = std::min(best, std::max(static_cast<int>(table[rest]), q));
      }
      table[s] = static_cast<std::int8_t>(best);
    }
  }
  return table[full];
}

int treewidth_exact(const Graph& g, int limit, int threads) {
  if (threads <= 1) return treewidth_exact_serial(g, limit);
  return treewidth_exact_parallel(g, limit, threads);
}

}  // namespace cycledepth
