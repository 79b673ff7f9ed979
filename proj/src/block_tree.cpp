#include "cycledepth/block_tree.hpp"

#include <algorithm>

#include "cycledepth/errors.hpp"

namespace cycledepth {

namespace {

struct DfsFrame {
  int v;
  int parent;
  size_t next;
};

// Edge-stack lowpoint DFS. Calls sink(vertex_list) once per block; the lists
// are unsorted at this point.
template <typename Sink>
void for_each_block(const Graph& g, Sink&& sink) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<DfsFrame> frames;
  std::vector<int> stamp(n, -1);
  int block_id = 0;
  int timer = 0;

  auto pop_block = [&](int p, int v) {
    std::vector<int> verts;
    auto add = [&](int w) {
      if (stamp[w] != block_id) {
        stamp[w] = block_id;
        verts.push_back(w);
      }
    };
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      add(e.first);
      add(e.second);
      if (e.first == p && e.second == v) break;
    }
    ++block_id;
    sink(std::move(verts));
  };

  disc[0] = low[0] = timer++;
  frames.push_back({0, -1, 0});
  while (!frames.empty()) {
    DfsFrame& f = frames.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      int u = nbrs[f.next++];
      if (u == f.parent) continue;
      if (disc[u] == -1) {
        edge_stack.push_back({f.v, u});
        disc[u] = low[u] = timer++;
        frames.push_back({u, f.v, 0});
      } else if (disc[u] < disc[f.v]) {
        edge_stack.push_back({f.v, u});
        low[f.v] = std::min(low[f.v], disc[u]);
      }
    } else {
      int v = f.v;
      frames.pop_back();
      if (frames.empty()) break;
      int p = frames.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) pop_block(p, v);
    }
  }
}

void require_connected_nontrivial(const Graph& g, const char* op) {
  if (g.vertex_count() < 2)
    throw precondition_error(std::string(op) + ": graph must have at least two vertices");
  if (!is_connected(g)) throw precondition_error(std::string(op) + ": graph must be connected");
}

}  // namespace

std::vector<int> BlockTree::cutvertices_of_block(int b) const {
  std::vector<int> out;
  blocks_[b].for_each([&](int v) {
    if (cutvertices_.contains(v)) out.push_back(v);
  });
  return out;
}

std::vector<Edge> BlockTree::bridge_edges() const {
  std::vector<Edge> out;
  for (const VertexSet& b : blocks_) {
    if (b.size() == 2) {
      auto verts = b.to_vector();
      out.emplace_back(verts[0], verts[1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int BlockTree::tree_edge_count() const {
  int edges = 0;
  cutvertices_.for_each([&](int x) { edges += static_cast<int>(blocks_of_vertex_[x].size()); });
  return edges;
}

BlockTree block_decomposition(const Graph& g) {
  require_connected_nontrivial(g, "block_decomposition");
  std::vector<std::vector<int>> raw;
  for_each_block(g, [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    raw.push_back(std::move(verts));
  });
  std::sort(raw.begin(), raw.end());

  BlockTree t;
  t.host_ = g;
  t.cutvertices_ = VertexSet(g.vertex_count());
  t.blocks_of_vertex_.assign(g.vertex_count(), {});
  t.blocks_.reserve(raw.size());
  for (int b = 0; b < static_cast<int>(raw.size()); ++b) {
    VertexSet set(g.vertex_count());
    for (int v : raw[b]) {
      set.insert(v);
      t.blocks_of_vertex_[v].push_back(b);
    }
    t.blocks_.push_back(std::move(set));
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (t.blocks_of_vertex_[v].size() >= 2) t.cutvertices_.insert(v);
  return t;
}

std::vector<BlockTreeBranch> branches_at_block(const BlockTree& t, int b) {
  if (b < 0 || b >= t.block_count()) throw precondition_error("branches_at_block: no such block");
  std::vector<BlockTreeBranch> out;
  std::vector<char> block_seen(t.block_count(), 0);
  block_seen[b] = 1;
  std::vector<int> stack;
  for (int x : t.cutvertices_of_block(b)) {
    // Component of the tree minus block b that contains cutvertex x.
    VertexSet piece(t.host().vertex_count());
    piece.insert(x);
    stack.clear();
    for (int nb : t.blocks_of_cutvertex(x))
      if (!block_seen[nb]) {
        block_seen[nb] = 1;
        stack.push_back(nb);
      }
    while (!stack.empty()) {
      int blk = stack.back();
      stack.pop_back();
      piece |= t.block(blk);
      for (int c : t.cutvertices_of_block(blk))
        for (int nb : t.blocks_of_cutvertex(c))
          if (!block_seen[nb]) {
            block_seen[nb] = 1;
            stack.push_back(nb);
          }
    }
    out.push_back({x, std::move(piece)});
  }
  return out;
}

std::vector<BlockTreeBranch> branches_at_cutvertex(const BlockTree& t, int x) {
  if (x < 0 || x >= t.host().vertex_count() || !t.cutvertices().contains(x))
    throw precondition_error("branches_at_cutvertex: vertex is not a cutvertex node");
  std::vector<BlockTreeBranch> out;
  std::vector<char> block_seen(t.block_count(), 0);
  std::vector<int> stack;
  for (int b : t.blocks_of_cutvertex(x)) {
    if (block_seen[b]) continue;
    VertexSet piece(t.host().vertex_count());
    block_seen[b] = 1;
    stack.assign(1, b);
    while (!stack.empty()) {
      int blk = stack.back();
      stack.pop_back();
      piece |= t.block(blk);
      for (int c : t.cutvertices_of_block(blk)) {
        if (c == x) continue;  // the removed tree node
        for (int nb : t.blocks_of_cutvertex(c))
          if (!block_seen[nb]) {
            block_seen[nb] = 1;
            stack.push_back(nb);
          }
      }
    }
    out.push_back({x, std::move(piece)});
  }
  return out;
}

VertexSet cutvertices(const Graph& g) {
  require_connected_nontrivial(g, "cutvertices");
  std::vector<int> membership(g.vertex_count(), 0);
  for_each_block(g, [&](std::vector<int> verts) {
    for (int v : verts) ++membership[v];
  });
  VertexSet out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (membership[v] >= 2) out.insert(v);
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  require_connected_nontrivial(g, "bridges");
  std::vector<Edge> out;
  for_each_block(g, [&](std::vector<int> verts) {
    if (verts.size() == 2)
      out.emplace_back(std::min(verts[0], verts[1]), std::max(verts[0], verts[1]));
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  return cutvertices(g).empty();
}

}  // namespace cycledepth
