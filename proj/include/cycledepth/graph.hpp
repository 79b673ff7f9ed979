#ifndef CYCLEDEPTH_GRAPH_HPP
#define CYCLEDEPTH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycledepth/vertex_set.hpp"

namespace cycledepth {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph over dense vertex ids 0..n-1.
// Adjacency lists are sorted; for n <= 64 per-vertex neighbor masks are kept
// alongside, which is what the exact solvers run on.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity: throws validation_error on self-loops or duplicate
  // edges, precondition_error on out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(int u, int v) const;

  bool small() const { return n_ <= 64; }
  uint64_t neighbor_mask(int v) const { return masks_[v]; }  // n <= 64 only

  VertexSet neighbor_set(int v) const;
  VertexSet full_set() const { return VertexSet::full(n_); }

  // All edges (u < v), ascending.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<int> offsets_{0};   // CSR offsets, size n_+1
  std::vector<int> adjacency_;    // sorted within each vertex
  std::vector<uint64_t> masks_;   // neighbor masks when n_ <= 64
};

// Ordered vertex sequence without repeats; consecutive vertices adjacent in
// the host. Length counts edges.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool valid_in(const Graph& g, std::string* why = nullptr) const;
};

// Cyclic vertex sequence, at least 3 vertices, no repeats; consecutive
// vertices (cyclically) adjacent in the host. Length counts edges = vertices.
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool valid_in(const Graph& g, std::string* why = nullptr) const;
  bool contains_edge(int u, int v) const;
};

// Canonical orientation: smallest vertex first, then the direction with the
// smaller second vertex. Makes witnesses byte-stable across runs.
Cycle canonical_cycle(std::vector<int> vertices);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;  // sub vertex i -> host vertex to_host[i], ascending
};

// G[S]: edge kept iff both ends in S. Sub vertices are relabeled 0..|S|-1 in
// ascending host order; the label map round-trips ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Partition of V(G) into maximal connected parts, ordered by smallest
// contained vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// Component structure restricted to G[S].
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& s);

}  // namespace cycledepth

#endif
