#include "cycledepth/constructive.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "cycledepth/errors.hpp"

namespace cycledepth {
namespace {

// Owns a solver unless the caller supplied a shared one.
struct SolverBox {
  std::optional<TreedepthSolver> owned;

  TreedepthSolver& get(const Graph& g, const ExtractionOptions& opts) {
    if (opts.solver) {
      if (opts.solver->host().vertex_count() != g.vertex_count())
        throw precondition_error("shared solver was built over a different graph");
      return *opts.solver;
    }
    owned.emplace(g, opts.treedepth_limit);
    return *owned;
  }
};

struct Extraction {
  const Graph& host;
  TreedepthSolver& solver;
  bool check;

  int td(const VertexSet& s) { return solver.treedepth(s); }
};

VertexSet to_host_set(const std::vector<int>& to_host, const VertexSet& local,
                      int host_n) {
  VertexSet s(host_n);
  local.for_each([&](int v) { s.insert(to_host[v]); });
  return s;
}

VertexSet to_local_set(const std::vector<int>& to_sub, const VertexSet& host_set,
                       int local_n) {
  VertexSet s(local_n);
  host_set.for_each([&](int v) { s.insert(to_sub[v]); });
  return s;
}

std::vector<int> host_to_sub_map(const Graph& host, const std::vector<int>& to_host) {
  std::vector<int> to_sub(host.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(to_host.size()); ++i) to_sub[to_host[i]] = i;
  return to_sub;
}

// The block-tree-path recursion over host-labeled pieces. Each level
// decomposes the current piece; all treedepth probes stay in host labels so
// one solver memo serves the whole extraction.
void btp_rec(Extraction& ctx, const VertexSet& piece, int x0,
             std::vector<VertexSet>* blocks, std::vector<int>* cuts) {
  const int host_n = ctx.host.vertex_count();
  InducedSubgraph sub = induced_subgraph(ctx.host, piece);
  BlockTree t = block_decomposition(sub.graph);
  if (t.block_count() == 1) {
    blocks->push_back(piece);  // the trivial path B0
    return;
  }
  std::vector<int> to_sub = host_to_sub_map(ctx.host, sub.to_host);
  const int lx0 = to_sub[x0];

  if (t.cutvertices().contains(lx0)) {
    // td(piece - x0) is attained inside one branch at x0; recurse there.
    VertexSet best_piece;
    int best = -1;
    for (const auto& br : branches_at_cutvertex(t, lx0)) {
      VertexSet hp = to_host_set(sub.to_host, br.piece, host_n);
      const int v = ctx.td(hp.without(x0));
      if (v > best) {
        best = v;
        best_piece = hp;
      }
    }
    btp_rec(ctx, best_piece, x0, blocks, cuts);
    return;
  }

  // x0 is interior to a unique block B0. Descend into the branch maximizing
  // td(branch - attachment); the first maximum has the smallest attachment.
  const int b0 = t.block_containing(lx0);
  VertexSet best_piece;
  int best = -1;
  int best_x1 = -1;
  for (const auto& br : branches_at_block(t, b0)) {
    VertexSet hp = to_host_set(sub.to_host, br.piece, host_n);
    const int y = sub.to_host[br.root_attachment];
    const int v = ctx.td(hp.without(y));
    if (v > best) {
      best = v;
      best_piece = hp;
      best_x1 = y;
    }
  }
  blocks->push_back(to_host_set(sub.to_host, t.block(b0), host_n));
  cuts->push_back(best_x1);
  btp_rec(ctx, best_piece, best_x1, blocks, cuts);
}

// Sum of td(Bi - xi) with the anchor standing in for x0.
int block_path_sum(Extraction& ctx, const std::vector<VertexSet>& blocks,
                   const std::vector<int>& cuts, int anchor) {
  int sum = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    sum += ctx.td(blocks[i].without(i == 0 ? anchor : cuts[i - 1]));
  return sum;
}

int find_block(const BlockTree& t, const VertexSet& b) {
  for (int i = 0; i < t.block_count(); ++i)
    if (t.block(i) == b) return i;
  return -1;
}

struct LabTop {
  Path path;                      // a .. b
  std::vector<VertexSet> blocks;  // B0..Bm of piece - b
  std::vector<int> attachments;   // x0=a, x1..xm, x_{m+1}
  std::vector<Path> segments;     // Pi: x_i -> x_{i+1}
};

Path lab_rec(Extraction& ctx, const VertexSet& piece, int a, int b);

LabTop lab_assemble(Extraction& ctx, const VertexSet& piece, int a, int b) {
  const int host_n = ctx.host.vertex_count();
  LabTop out;
  const VertexSet h = piece.without(b);

  std::vector<int> cuts;
  btp_rec(ctx, h, a, &out.blocks, &cuts);

  // Extend to a leaf of the block tree of piece - b, rooted at B0.
  InducedSubgraph sub = induced_subgraph(ctx.host, h);
  BlockTree t = block_decomposition(sub.graph);
  std::vector<int> to_sub = host_to_sub_map(ctx.host, sub.to_host);
  BlockTreePath lp;
  lp.anchor = to_sub[a];
  lp.host = sub.graph;
  for (const VertexSet& bl : out.blocks)
    lp.blocks.push_back(to_local_set(to_sub, bl, sub.graph.vertex_count()));
  for (int x : cuts) lp.cutvertices.push_back(to_sub[x]);
  lp = extend_to_leaf(t, lp);
  out.blocks.clear();
  cuts.clear();
  for (const VertexSet& bl : lp.blocks)
    out.blocks.push_back(to_host_set(sub.to_host, bl, host_n));
  for (int x : lp.cutvertices) cuts.push_back(sub.to_host[x]);

  out.attachments.push_back(a);
  out.attachments.insert(out.attachments.end(), cuts.begin(), cuts.end());

  // x_{m+1}: smallest neighbour of b inside Bm minus its attachment.
  const VertexSet& bm = out.blocks.back();
  const int xm = out.attachments.back();
  const std::uint64_t cand =
      ctx.host.neighbor_mask(b) & bm.mask() & ~(std::uint64_t{1} << xm);
  if (!cand)
    throw validation_error(
        "invariant violation: b has no neighbour in the last block minus its "
        "attachment");
  out.attachments.push_back(std::countr_zero(cand));

  // Segment Pi crosses Bi from x_i to x_{i+1}; built backwards so its length
  // is at least td(Bi - x_i).
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    Path seg = lab_rec(ctx, out.blocks[i], out.attachments[i + 1], out.attachments[i]);
    std::reverse(seg.vertices.begin(), seg.vertices.end());
    if (ctx.check) {
      const int need = ctx.td(out.blocks[i].without(out.attachments[i]));
      if (seg.length() < need)
        throw validation_error(
            "invariant violation: segment shorter than td(block - attachment)");
    }
    out.segments.push_back(std::move(seg));
  }

  std::vector<int> verts;
  for (std::size_t i = 0; i < out.segments.size(); ++i) {
    const auto& sv = out.segments[i].vertices;
    verts.insert(verts.end(), sv.begin() + (i == 0 ? 0 : 1), sv.end());
  }
  verts.push_back(b);
  out.path = Path{std::move(verts)};

  if (ctx.check) {
    int seg_sum = 0;
    for (const Path& p : out.segments) seg_sum += p.length();
    const int td_sum = block_path_sum(ctx, out.blocks, cuts, a);
    const int td_ab = ctx.td(h.without(a));
    const int td_b = ctx.td(h);
    if (!(seg_sum >= td_sum && td_sum >= td_ab && td_ab >= td_b - 1 &&
          out.path.length() >= td_b))
      throw validation_error("invariant violation: chain inequality broken");
  }
  return out;
}

Path lab_rec(Extraction& ctx, const VertexSet& piece, int a, int b) {
  if (piece.size() == 2) {
    if (!ctx.host.has_edge(a, b))
      throw validation_error("invariant violation: two-vertex block missing its edge");
    return Path{{a, b}};
  }
  return lab_assemble(ctx, piece, a, b).path;
}

void require_vertex(const Graph& g, int v, const char* name) {
  if (v < 0 || v >= g.vertex_count())
    throw precondition_error(std::string(name) + " is not a vertex of the graph");
}

}  // namespace

BlockTreePath block_tree_path(const Graph& g, int x0, const ExtractionOptions& opts) {
  require_vertex(g, x0, "x0");
  if (g.vertex_count() < 2 || !is_connected(g))
    throw precondition_error("graph must be connected with at least 2 vertices");

  SolverBox box;
  Extraction ctx{g, box.get(g, opts), opts.check_with_oracles};
  BlockTreePath p;
  p.anchor = x0;
  p.host = g;
  btp_rec(ctx, g.full_set(), x0, &p.blocks, &p.cutvertices);

  if (ctx.check) {
    const int sum = block_path_sum(ctx, p.blocks, p.cutvertices, x0);
    if (sum < ctx.td(g.full_set().without(x0)))
      throw validation_error(
          "invariant violation: block path sum below td(G - x0)");
  }
  return p;
}

BlockTreePath extend_to_leaf(const BlockTree& t, const BlockTreePath& p) {
  if (p.blocks.empty()) throw precondition_error("path has no blocks");
  if (p.host.vertex_count() != t.host().vertex_count())
    throw precondition_error("path and tree disagree on the host graph");
  if (p.cutvertices.size() + 1 != p.blocks.size() &&
      !(p.cutvertices.empty() && p.blocks.size() == 1))
    throw precondition_error("path has mismatched block and cutvertex counts");
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (find_block(t, p.blocks[i]) < 0)
      throw precondition_error("path block is not a block of the tree");
    if (i > 0) {
      const int x = p.cutvertices[i - 1];
      if (!p.blocks[i - 1].contains(x) || !p.blocks[i].contains(x) ||
          p.blocks[i - 1] == p.blocks[i])
        throw precondition_error("path is not a chain in the block tree");
    }
  }
  if (!p.blocks.front().contains(p.anchor))
    throw precondition_error("anchor does not lie in the first block");

  BlockTreePath out = p;
  int last = find_block(t, out.blocks.back());
  int entry = out.cutvertices.empty() ? out.anchor : out.cutvertices.back();
  while (true) {
    int next_x = -1;
    for (int x : t.cutvertices_of_block(last)) {
      if (x != entry) {
        next_x = x;
        break;
      }
    }
    if (next_x < 0) break;
    int child = -1;
    for (int bi : t.blocks_of_cutvertex(next_x)) {
      if (bi != last) {
        child = bi;
        break;
      }
    }
    out.blocks.push_back(t.block(child));
    out.cutvertices.push_back(next_x);
    last = child;
    entry = next_x;
  }
  return out;
}

Path long_ab_path(const Graph& g, int a, int b, const ExtractionOptions& opts) {
  require_vertex(g, a, "a");
  require_vertex(g, b, "b");
  if (a == b) throw precondition_error("a and b must be distinct");
  const bool k2 = g.vertex_count() == 2 && g.edge_count() == 1;
  if (!k2 && !is_two_connected(g))
    throw precondition_error("graph must be K2 or 2-connected");

  SolverBox box;
  Extraction ctx{g, box.get(g, opts), opts.check_with_oracles};
  Path p = lab_rec(ctx, g.full_set(), a, b);
  if (ctx.check) {
    if (p.length() < ctx.td(g.full_set().without(b)))
      throw validation_error("invariant violation: path shorter than td(G - b)");
  }
  return p;
}

CycleCertificate long_cycle_through_edge(const Graph& g, int a, int b,
                                         const ExtractionOptions& opts) {
  require_vertex(g, a, "a");
  require_vertex(g, b, "b");
  if (!is_two_connected(g)) throw precondition_error("graph must be 2-connected");
  if (!g.has_edge(a, b)) throw precondition_error("ab must be an edge of the graph");

  SolverBox box;
  Extraction ctx{g, box.get(g, opts), opts.check_with_oracles};
  LabTop top = lab_assemble(ctx, g.full_set(), a, b);

  CycleCertificate cert;
  cert.edge = {a, b};
  cert.host = g;
  cert.treedepth = ctx.solver.treedepth();
  cert.segment_paths = std::move(top.segments);
  cert.closing_vertex = top.attachments.back();
  cert.cycle = canonical_cycle(top.path.vertices);

  std::string why;
  if (!cert.cycle.valid_in(g, &why))
    throw validation_error("invariant violation: extracted cycle invalid: " + why);
  if (!cert.cycle.contains_edge(a, b))
    throw validation_error("invariant violation: cycle misses the anchor edge");
  if (cert.cycle.length() < cert.treedepth)
    throw validation_error("invariant violation: cycle shorter than treedepth");
  return cert;
}

}  // namespace cycledepth
