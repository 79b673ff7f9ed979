#include "cycledepth/treedepth.hpp"

#include <algorithm>
#include <bit>

#include "cycledepth/errors.hpp"

namespace cycledepth {
namespace {

constexpr int kDenseCutoff = 20;

}  // namespace

TreedepthSolver::TreedepthSolver(const Graph& g, int limit) : host_(g), limit_(limit) {
  if (limit < 1) throw precondition_error("treedepth limit must be at least 1");
  const int n = g.vertex_count();
  limit_ = std::min(limit, kTreedepthHardLimit);
  if (n > limit_) throw size_limit_error("treedepth", n, limit_);
  full_mask_ = low_bits(n);
  dense_ = n <= kDenseCutoff;
  if (dense_) {
    value_.assign(std::size_t{1} << n, -1);
    root_.assign(std::size_t{1} << n, -1);
  }
}

int TreedepthSolver::treedepth(const VertexSet& s) {
  if (s.universe() != host_.vertex_count())
    throw precondition_error("vertex set universe does not match host graph");
  return treedepth(s.mask());
}

int TreedepthSolver::treedepth(std::uint64_t mask) {
  if (mask & ~full_mask_)
    throw precondition_error("vertex set reaches outside the host graph");
  if (mask == 0) return 0;
  return td_components(mask);
}

std::uint64_t TreedepthSolver::component_of(std::uint64_t s, int seed) const {
  std::uint64_t comp = std::uint64_t{1} << seed;
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= host_.neighbor_mask(std::countr_zero(m));
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

int TreedepthSolver::td_components(std::uint64_t s) {
  int worst = 0;
  while (s) {
    std::uint64_t c = component_of(s, std::countr_zero(s));
    worst = std::max(worst, td_connected(c));
    s &= ~c;
  }
  return worst;
}

int TreedepthSolver::td_connected(std::uint64_t s) {
  const int k = std::popcount(s);
  if (k <= 2) return k;  // single vertex, or a connected pair (an edge)

  if (dense_) {
    if (value_[s] >= 0) return value_[s];
  } else if (auto it = map_.find(s); it != map_.end()) {
    return static_cast<int>(it->second & 0xff);
  }

  // td(s) = 1 + min over roots v of max over components of s - v. The inner
  // loop abandons v as soon as it cannot strictly beat the incumbent, which
  // never corrupts the memo: only fully evaluated candidates are recorded.
  int best = k + 1;
  int best_v = -1;
  for (std::uint64_t m = s; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    std::uint64_t rest = s & ~(std::uint64_t{1} << v);
    int worst = 0;
    while (rest) {
      std::uint64_t c = component_of(rest, std::countr_zero(rest));
      worst = std::max(worst, td_connected(c));
      if (1 + worst >= best) break;
      rest &= ~c;
    }
    if (rest == 0 && 1 + worst < best) {
      best = 1 + worst;
      best_v = v;
      if (best == 2) break;  // floor for a connected set with an edge
    }
  }

  if (dense_) {
    value_[s] = static_cast<std::int8_t>(best);
    root_[s] = static_cast<std::int8_t>(best_v);
  } else {
    map_[s] = static_cast<std::uint16_t>(best | ((best_v + 1) << 8));
  }
  return best;
}

int TreedepthSolver::best_root(std::uint64_t s) const {
  if (std::popcount(s) <= 2) return std::countr_zero(s);
  if (dense_) return root_[s];
  return static_cast<int>(map_.at(s) >> 8) - 1;
}

void TreedepthSolver::build_forest(std::uint64_t s, int parent,
                                   std::vector<int>* parent_of) {
  while (s) {
    std::uint64_t c = component_of(s, std::countr_zero(s));
    const int r = best_root(c);
    (*parent_of)[r] = parent;
    std::uint64_t below = c & ~(std::uint64_t{1} << r);
    if (below) build_forest(below, r, parent_of);
    s &= ~c;
  }
}

EliminationForest TreedepthSolver::forest(const VertexSet& s) {
  if (s.universe() != host_.vertex_count())
    throw precondition_error("vertex set universe does not match host graph");
  const std::uint64_t mask = s.mask();
  if (mask & ~full_mask_)
    throw precondition_error("vertex set reaches outside the host graph");
  treedepth(mask);  // ensure the memo covers the winning decomposition
  std::vector<int> parent_host(host_.vertex_count(), -1);
  if (mask) build_forest(mask, -1, &parent_host);

  if (mask == full_mask_) return make_elimination_forest(host_, std::move(parent_host));

  InducedSubgraph sub = induced_subgraph(host_, s);
  std::vector<int> host_to_sub(host_.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(sub.to_host.size()); ++i)
    host_to_sub[sub.to_host[i]] = i;
  std::vector<int> parent_sub(sub.to_host.size(), -1);
  for (int i = 0; i < static_cast<int>(sub.to_host.size()); ++i) {
    int p = parent_host[sub.to_host[i]];
    parent_sub[i] = p == -1 ? -1 : host_to_sub[p];
  }
  return make_elimination_forest(sub.graph, std::move(parent_sub));
}

EliminationForest TreedepthSolver::forest() { return forest(host_.full_set()); }

TreedepthResult treedepth_exact(const Graph& g, int limit) {
  TreedepthSolver solver(g, limit);
  TreedepthResult result;
  result.value = solver.treedepth();
  result.forest = solver.forest();
  return result;
}

}  // namespace cycledepth
