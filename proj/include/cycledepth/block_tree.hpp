#ifndef CYCLEDEPTH_BLOCK_TREE_HPP
#define CYCLEDEPTH_BLOCK_TREE_HPP

#include <vector>

#include "cycledepth/graph.hpp"

namespace cycledepth {

// Bipartite tree over the blocks and cutvertices of a connected graph.
// Blocks are ordered lexicographically by their ascending vertex lists, so
// every traversal downstream is deterministic. A cutvertex-node is adjacent
// to a block-node iff the vertex lies in the block.
class BlockTree {
 public:
  const Graph& host() const { return host_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const VertexSet& block(int b) const { return blocks_[b]; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  const VertexSet& cutvertices() const { return cutvertices_; }

  // Block indices containing x, ascending. Empty for non-cutvertices unless
  // queried via block_containing.
  std::span<const int> blocks_of_cutvertex(int x) const {
    return {blocks_of_vertex_[x].data(), blocks_of_vertex_[x].size()};
  }
  // Cutvertices lying in block b, ascending.
  std::vector<int> cutvertices_of_block(int b) const;

  // Smallest-index block containing v (every vertex lies in >= 1 block).
  int block_containing(int v) const { return blocks_of_vertex_[v].front(); }

  // Blocks that are single edges, ascending.
  std::vector<Edge> bridge_edges() const;

  int tree_node_count() const { return block_count() + cutvertices_.size(); }
  int tree_edge_count() const;

 private:
  friend BlockTree block_decomposition(const Graph& g);
  Graph host_;
  std::vector<VertexSet> blocks_;
  VertexSet cutvertices_;
  std::vector<std::vector<int>> blocks_of_vertex_;  // per vertex, ascending
};

// One component of the block tree with a designated node removed. piece is
// the union of the component's block vertex sets; root_attachment is the
// cutvertex through which the component hangs off the removed node (for
// branches at a cutvertex x, the attachment is x itself).
struct BlockTreeBranch {
  int root_attachment;
  VertexSet piece;
};

// Lowpoint depth-first decomposition. Requires G connected with n >= 2.
BlockTree block_decomposition(const Graph& g);

// Components of the block tree minus block-node b; one branch per cutvertex
// of b, ordered by attachment vertex. Empty when the graph is a single block.
std::vector<BlockTreeBranch> branches_at_block(const BlockTree& t, int b);

// Components of the block tree minus cutvertex-node x; each piece contains x
// and the pieces minus x are exactly the components of G - x.
std::vector<BlockTreeBranch> branches_at_cutvertex(const BlockTree& t, int x);

// Vertices whose deletion disconnects G. Requires G connected, n >= 2.
VertexSet cutvertices(const Graph& g);

// Edges whose deletion disconnects G, ascending. Requires G connected, n >= 2.
std::vector<Edge> bridges(const Graph& g);

// Connected, at least three vertices, and no cutvertex.
bool is_two_connected(const Graph& g);

}  // namespace cycledepth

#endif
