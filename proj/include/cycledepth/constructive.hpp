#ifndef CYCLEDEPTH_CONSTRUCTIVE_HPP
#define CYCLEDEPTH_CONSTRUCTIVE_HPP

#include <vector>

#include "cycledepth/block_tree.hpp"
#include "cycledepth/graph.hpp"
#include "cycledepth/treedepth.hpp"
#include "cycledepth/vertex_set.hpp"

namespace cycledepth {

// Walk in the block tree: B0 x1 B1 ... xm Bm with the anchor x0 in B0 and
// each xi shared by the consecutive blocks. Guarantees
//   sum_i td(Bi - xi) >= td(host - x0)        (x0 standing in for i = 0).
struct BlockTreePath {
  int anchor = -1;                // x0
  std::vector<VertexSet> blocks;  // B0..Bm as host vertex sets
  std::vector<int> cutvertices;   // x1..xm
  Graph host;
};

// Output of the cycle extraction: the anchor edge ab, the assembled cycle,
// the exact treedepth it is measured against, and the per-block paths
// P0..Pm whose concatenation plus the closing edge forms the cycle.
struct CycleCertificate {
  Edge edge;
  Cycle cycle;
  int treedepth = 0;
  std::vector<Path> segment_paths;  // Pi runs x_i -> x_{i+1}, host labels
  int closing_vertex = -1;          // x_{m+1}, the b-neighbour ending P_m
  Graph host;
};

struct ExtractionOptions {
  // Assert every intermediate inequality (lemma sums, segment lengths, the
  // chain down to td(G-b) - 1) against the exact oracle. Off by default:
  // the checks cost extra exponential-oracle calls.
  bool check_with_oracles = false;
  int treedepth_limit = kDefaultTreedepthLimit;
  // Optional solver shared across extractions on the same host graph; must
  // have been built over exactly that graph. Owned by the caller.
  TreedepthSolver* solver = nullptr;
};

// The path-in-the-block-tree construction. Base case: a single block is the
// trivial path. If x0 is a cutvertex, recurse into the branch maximizing
// td(branch - x0); otherwise start at the block holding x0 and descend into
// the branch maximizing td(branch - attachment). Ties pick the smallest
// attachment (branch order is deterministic).
// Pre: g connected, n >= 2, x0 a vertex.
BlockTreePath block_tree_path(const Graph& g, int x0,
                              const ExtractionOptions& opts = {});

// Extends p block by block (smallest eligible cutvertex, then smallest
// block) until its last block has no cutvertex besides the one it was
// entered through — with the entry vertex being the anchor for a trivial
// path. Appended terms td(Bi - xi) are >= 0, so the sum inequality is
// preserved. Pre: p valid in t, same host.
BlockTreePath extend_to_leaf(const BlockTree& t, const BlockTreePath& p);

// An a-b path of length >= td(g - b): block-tree path of g - b anchored at
// a, extended leafward, closed by a b-neighbour x_{m+1} in the last block,
// with each block crossed by a recursively built segment of length
// >= td(Bi - xi). Pre: g is K2 or 2-connected, a != b.
Path long_ab_path(const Graph& g, int a, int b,
                  const ExtractionOptions& opts = {});

// The theorem's assembly: long_ab_path(g, a, b) closed by the edge ab. The
// path has length >= td(g-b) >= td(g) - 1 and, being at least 2 edges long,
// cannot itself use ab, so the result is a cycle of length >= td(g)
// through ab. Pre: g 2-connected, ab an edge.
CycleCertificate long_cycle_through_edge(const Graph& g, int a, int b,
                                         const ExtractionOptions& opts = {});

}  // namespace cycledepth

#endif
