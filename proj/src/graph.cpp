#include "cycledepth/graph.hpp"

#include <algorithm>

#include "cycledepth/errors.hpp"

namespace cycledepth {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw precondition_error("vertex count must be nonnegative");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw precondition_error("edge endpoint out of range: " + std::to_string(u) + " " +
                               std::to_string(v));
    if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.n_ = n;
  g.edge_count_ = static_cast<int>(edges.size());
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
      throw validation_error("duplicate edge at vertex " + std::to_string(v));
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(adj[v].size());
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (int v = 0; v < n; ++v)
    g.adjacency_.insert(g.adjacency_.end(), adj[v].begin(), adj[v].end());
  if (n <= 64) {
    g.masks_.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v)) g.masks_[v] |= uint64_t{1} << u;
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  if (small()) return (masks_[u] >> v) & 1;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::neighbor_set(int v) const {
  if (small()) return VertexSet::from_mask(n_, masks_[v]);
  VertexSet s(n_);
  for (int u : neighbors(v)) s.insert(u);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int v = 0; v < n_; ++v)
    for (int u : neighbors(v))
      if (v < u) out.emplace_back(v, u);
  return out;
}

bool Path::valid_in(const Graph& g, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (vertices.empty()) return fail("path has no vertices");
  VertexSet seen(g.vertex_count());
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) return fail("path vertex out of range");
    if (seen.contains(v)) return fail("path repeats vertex " + std::to_string(v));
    seen.insert(v);
    if (i > 0 && !g.has_edge(vertices[i - 1], v))
      return fail("path step " + std::to_string(vertices[i - 1]) + "-" + std::to_string(v) +
                  " is not an edge");
  }
  return true;
}

bool Cycle::valid_in(const Graph& g, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (vertices.size() < 3) return fail("cycle needs at least 3 vertices");
  Path as_path{vertices};
  std::string inner;
  if (!as_path.valid_in(g, &inner)) return fail(inner);
  if (!g.has_edge(vertices.back(), vertices.front()))
    return fail("closing step " + std::to_string(vertices.back()) + "-" +
                std::to_string(vertices.front()) + " is not an edge");
  return true;
}

bool Cycle::contains_edge(int u, int v) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    int a = vertices[i];
    int b = vertices[(i + 1) % vertices.size()];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

Cycle canonical_cycle(std::vector<int> vertices) {
  auto it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), it, vertices.end());
  if (vertices.size() >= 3 && vertices.back() < vertices[1])
    std::reverse(vertices.begin() + 1, vertices.end());
  return Cycle{std::move(vertices)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> to_host = s.to_vector();
  std::vector<int> to_sub(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(to_host.size()); ++i) to_sub[to_host[i]] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(to_host.size()); ++i)
    for (int u : g.neighbors(to_host[i]))
      if (to_sub[u] > i) edges.emplace_back(i, to_sub[u]);
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<int>(to_host.size()), edges);
  out.to_host = std::move(to_host);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.full_set());
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> parts;
  if (g.small()) {
    uint64_t remaining = s.mask();
    while (remaining) {
      uint64_t comp = remaining & -remaining;  // seed: smallest vertex
      uint64_t frontier = comp;
      while (frontier) {
        uint64_t next = 0;
        for (uint64_t m = frontier; m; m &= m - 1)
          next |= g.neighbor_mask(std::countr_zero(m));
        frontier = next & remaining & ~comp;
        comp |= frontier;
      }
      parts.push_back(VertexSet::from_mask(g.vertex_count(), comp));
      remaining &= ~comp;
    }
    return parts;
  }
  VertexSet remaining = s;
  std::vector<int> stack;
  while (!remaining.empty()) {
    int seed = remaining.first();
    VertexSet comp(g.vertex_count());
    comp.insert(seed);
    remaining.erase(seed);
    stack.assign(1, seed);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (remaining.contains(u)) {
          remaining.erase(u);
          comp.insert(u);
          stack.push_back(u);
        }
      }
    }
    parts.push_back(std::move(comp));
  }
  return parts;
}

bool is_connected(const Graph& g) { return is_connected(g, g.full_set()); }

bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  if (g.small()) {
    uint64_t inside = s.mask();
    uint64_t comp = inside & -inside;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t m = frontier; m; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m));
      frontier = next & inside & ~comp;
      comp |= frontier;
    }
    return comp == inside;
  }
  return connected_components(g, s).size() == 1;
}

}  // namespace cycledepth
