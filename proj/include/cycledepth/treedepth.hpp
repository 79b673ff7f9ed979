#ifndef CYCLEDEPTH_TREEDEPTH_HPP
#define CYCLEDEPTH_TREEDEPTH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cycledepth/elimination_forest.hpp"
#include "cycledepth/graph.hpp"
#include "cycledepth/vertex_set.hpp"

namespace cycledepth {

inline constexpr int kDefaultTreedepthLimit = 20;
inline constexpr int kTreedepthHardLimit = 64;

// Exact treedepth by memoized recursion over vertex subsets of one host
// graph: td of a connected piece is 1 + min over roots v of the max over
// components of td after deleting v. The memo is shared across all queries
// against the same host, which is what makes repeated subgraph probes (block
// interiors, deleted-vertex pieces) cheap.
class TreedepthSolver {
 public:
  explicit TreedepthSolver(const Graph& g, int limit = kDefaultTreedepthLimit);

  // Treedepth of the induced subgraph on `s` (max over its components).
  int treedepth(const VertexSet& s);
  int treedepth(std::uint64_t mask);
  int treedepth() { return treedepth(full_mask_); }

  // Elimination forest realising treedepth(s), over the induced subgraph on
  // `s` (vertices relabeled ascending); forest() keeps host labels.
  EliminationForest forest(const VertexSet& s);
  EliminationForest forest();

  const Graph& host() const { return host_; }
  int limit() const { return limit_; }

 private:
  int td_components(std::uint64_t s);
  int td_connected(std::uint64_t s);
  int best_root(std::uint64_t s) const;  // connected s, already solved
  void build_forest(std::uint64_t s, int parent, std::vector<int>* parent_of);

  std::uint64_t component_of(std::uint64_t s, int seed) const;

  const Graph& host_;
  int limit_;
  std::uint64_t full_mask_;
  bool dense_;
  // dense memo: value and chosen root per subset mask, -1 = unsolved
  std::vector<std::int8_t> value_;
  std::vector<std::int8_t> root_;
  // sparse memo for hosts past the dense cutoff: packs (value, root)
  std::unordered_map<std::uint64_t, std::uint16_t> map_;
};

struct TreedepthResult {
  int value = 0;
  EliminationForest forest;
};

// One-shot convenience over a fresh solver.
TreedepthResult treedepth_exact(const Graph& g, int limit = kDefaultTreedepthLimit);

}  // namespace cycledepth

#endif
