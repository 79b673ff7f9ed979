#include "cycledepth/cycles.hpp"

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

// ---------------------------------------------------------------------------
// Subset DP: dp[S] holds the endpoints of simple paths from `anchor` whose
// vertex set is exactly S. Subsets are visited in increasing numeric order,
// which dominates set inclusion. `terminal`, when >= 0, is never extended
// from, so it only ever ends a path.

void fill_dp(const Graph& g, int anchor, std::uint64_t allowed, int terminal,
             std::vector<std::uint64_t>& dp) {
  std::fill(dp.begin(), dp.end(), 0);
  const std::uint64_t start = std::uint64_t{1} << anchor;
  dp[start] = start;
  for (std::uint64_t s = start; s < dp.size(); ++s) {
    std::uint64_t ends = dp[s];
    if (!ends) continue;
    for (std::uint64_t m = ends; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (v == terminal) continue;
      std::uint64_t cand = g.neighbor_mask(v) & allowed & ~s;
      for (std::uint64_t c = cand; c; c &= c - 1)
        dp[s | (c & -c)] |= c & -c;
    }
  }
}

struct AnchorBest {
  int size = 0;
  std::uint64_t set = 0;
  int endpoint = -1;
};

// Best closable state for one anchor of the longest-cycle DP: largest S with
// an endpoint adjacent to the anchor, first such S numerically, smallest
// endpoint within it.
AnchorBest scan_anchor(const Graph& g, int anchor, std::vector<std::uint64_t>& dp) {
  const std::uint64_t allowed = ~low_bits(anchor + 1) & low_bits(g.vertex_count());
  fill_dp(g, anchor, allowed | (std::uint64_t{1} << anchor), -1, dp);
  AnchorBest best;
  const std::uint64_t close = g.neighbor_mask(anchor);
  for (std::uint64_t s = std::uint64_t{1} << anchor; s < dp.size(); ++s) {
    std::uint64_t hits = dp[s] & close;
    if (!hits) continue;
    const int size = std::popcount(s);
    if (size < 3 || size <= best.size) continue;
    best = {size, s, std::countr_zero(hits)};
  }
  return best;
}

// Walk a DP table back from (set, endpoint) to the anchor, taking the
// smallest predecessor at every step. Returns anchor..endpoint.
std::vector<int> backtrack(const Graph& g, const std::vector<std::uint64_t>& dp,
                           std::uint64_t set, int endpoint) {
  std::vector<int> rev;
  while (true) {
    rev.push_back(endpoint);
    set &= ~(std::uint64_t{1} << endpoint);
    if (!set) break;
    std::uint64_t prev = dp[set] & g.neighbor_mask(endpoint) & set;
    endpoint = std::countr_zero(prev);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<Cycle> longest_cycle_dp(const Graph& g, int threads) {
  const int n = g.vertex_count();
  std::vector<AnchorBest> per_anchor(n);
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel num_threads(threads)
    {
      std::vector<std::uint64_t> dp(std::size_t{1} << n);
#pragma omp for schedule(dynamic)
      for (int s = 0; s < n; ++s) {
        if (g.degree(s) >= 2) per_anchor[s] = scan_anchor(g, s, dp);
      }
    }
  } else
#else
  (void)threads;
#endif
  {
    std::vector<std::uint64_t> dp(std::size_t{1} << n);
    for (int s = 0; s < n; ++s)
      if (g.degree(s) >= 2) per_anchor[s] = scan_anchor(g, s, dp);
  }

  int anchor = -1;
  AnchorBest best;
  for (int s = 0; s < n; ++s) {
    if (per_anchor[s].size > best.size) {
      best = per_anchor[s];
      anchor = s;
    }
  }
  if (anchor < 0) return std::nullopt;

  std::vector<std::uint64_t> dp(std::size_t{1} << n);
  const std::uint64_t allowed = ~low_bits(anchor + 1) & low_bits(n);
  fill_dp(g, anchor, allowed | (std::uint64_t{1} << anchor), -1, dp);
  return canonical_cycle(backtrack(g, dp, best.set, best.endpoint));
}

std::optional<Cycle> through_edge_dp(const Graph& g, int a, int b) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> dp(std::size_t{1} << n);
  fill_dp(g, a, low_bits(n), b, dp);
  AnchorBest best;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  for (std::uint64_t s = std::uint64_t{1} << a; s < dp.size(); ++s) {
    if (!(dp[s] & bbit)) continue;
    const int size = std::popcount(s);
    if (size < 3 || size <= best.size) continue;
    best = {size, s, b};
  }
  if (best.size == 0) return std::nullopt;
  return canonical_cycle(backtrack(g, dp, best.set, best.endpoint));
}

// ---------------------------------------------------------------------------
// Backtracking fallback for graphs past the DP size cap. Exact; the two
// prunes (the closing vertex must stay reachable, and the reachable region
// must be big enough to beat the incumbent) keep it practical on sparse
// graphs with short cycles.

struct CycleDfs {
  const Graph& g;
  // closure target: for whole-graph search this is the start vertex (cycle
  // minimum); for the through-edge search it is b and start is a.
  int start = 0;
  int target = 0;
  int floor_vertex = 0;  // whole-graph search only explores vertices >= this
  std::vector<char> visited;
  std::vector<int> path;
  std::vector<int> best;

  std::vector<int> bfs_scratch;
  std::vector<char> seen;

  explicit CycleDfs(const Graph& graph)
      : g(graph), visited(graph.vertex_count(), 0), seen(graph.vertex_count(), 0) {}

  // Vertices reachable from v through unvisited vertices >= floor_vertex
  // (v included). Sets *target_hits when any of them neighbours the target.
  int reachable(int v, bool* target_hits) {
    bfs_scratch.clear();
    bfs_scratch.push_back(v);
    seen[v] = 1;
    *target_hits = false;
    for (std::size_t i = 0; i < bfs_scratch.size(); ++i) {
      for (int w : g.neighbors(bfs_scratch[i])) {
        if (w == target) *target_hits = true;
        if (w < floor_vertex || visited[w] || seen[w]) continue;
        seen[w] = 1;
        bfs_scratch.push_back(w);
      }
    }
    const int count = static_cast<int>(bfs_scratch.size());
    for (int w : bfs_scratch) seen[w] = 0;
    return count;
  }

  void dfs(int v) {
    for (int w : g.neighbors(v)) {
      if (w == target) {
        // Cycle length: the whole path when closing back to the start, the
        // path plus the terminal vertex when closing into b.
        const int cyc = static_cast<int>(path.size()) + (target == start ? 0 : 1);
        if (cyc >= 3 && cyc > static_cast<int>(best.size())) {
          best = path;
          if (target != start) best.push_back(target);
        }
      }
      if (w == target && target != start) continue;  // never pass through b
      if (w < floor_vertex || visited[w]) continue;
      bool closes = false;
      const int reach = reachable(w, &closes);
      if (!closes) continue;
      // The cycle through this branch uses the current path plus vertices
      // from the reachable region (which already contains w, and b when
      // closing into b).
      if (static_cast<int>(path.size()) + reach <= static_cast<int>(best.size()))
        continue;
      visited[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      visited[w] = 0;
    }
  }
};

std::optional<Cycle> longest_cycle_dfs(const Graph& g) {
  CycleDfs search(g);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (g.degree(s) < 2) continue;
    search.start = search.target = search.floor_vertex = s;
    search.visited[s] = 1;
    search.path = {s};
    search.dfs(s);
    search.visited[s] = 0;
  }
  if (search.best.empty()) return std::nullopt;
  return canonical_cycle(search.best);
}

std::optional<Cycle> through_edge_dfs(const Graph& g, int a, int b) {
  CycleDfs search(g);
  search.start = a;
  search.target = b;
  search.floor_vertex = 0;
  search.visited[a] = 1;
  search.path = {a};
  search.dfs(a);
  if (search.best.empty()) return std::nullopt;
  return canonical_cycle(search.best);
}

bool use_dp(const Graph& g, const CycleOptions& opts) {
  const int cap = std::min(opts.dp_limit, kCycleDpHardLimit);
  return g.vertex_count() <= cap && g.small();
}

}  // namespace

std::optional<Cycle> longest_cycle(const Graph& g, const CycleOptions& opts) {
  if (opts.dp_limit < 1) throw precondition_error("cycle dp limit must be at least 1");
  if (g.vertex_count() < 3) return std::nullopt;
  return use_dp(g, opts) ? longest_cycle_dp(g, opts.threads) : longest_cycle_dfs(g);
}

std::optional<int> circumference(const Graph& g, const CycleOptions& opts) {
  auto cycle = longest_cycle(g, opts);
  if (!cycle) return std::nullopt;
  return cycle->length();
}

std::optional<Cycle> longest_cycle_through_edge(const Graph& g, int a, int b,
                                                const CycleOptions& opts) {
  if (opts.dp_limit < 1) throw precondition_error("cycle dp limit must be at least 1");
  if (!g.has_edge(a, b)) throw precondition_error("ab must be an edge of the graph");
  if (g.vertex_count() < 3) return std::nullopt;
  return use_dp(g, opts) ? through_edge_dp(g, a, b) : through_edge_dfs(g, a, b);
}

}  // namespace cycledepth
