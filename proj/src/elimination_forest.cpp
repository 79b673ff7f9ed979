#include "cycledepth/elimination_forest.hpp"

#include <algorithm>
#include <string>

#include "cycledepth/errors.hpp"

namespace cycledepth {
namespace {

// Depth of every vertex (root depth 1), or -1 in *cycle_vertex on a cycle.
std::vector<int> compute_depths(const std::vector<int>& parent, int* cycle_vertex) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> depth(n, 0);
  *cycle_vertex = -1;
  for (int v = 0; v < n; ++v) {
    if (depth[v] != 0) continue;
    // Walk up until a known depth or a root, then unwind.
    std::vector<int> chain;
    int u = v;
    while (u != -1 && depth[u] == 0) {
      if (static_cast<int>(chain.size()) > n) {
        *cycle_vertex = u;
        return depth;
      }
      chain.push_back(u);
      u = parent[u];
    }
    int d = (u == -1) ? 0 : depth[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

}  // namespace

EliminationForest make_elimination_forest(Graph host, std::vector<int> parent) {
  const int n = host.vertex_count();
  if (static_cast<int>(parent.size()) != n)
    throw validation_error("parent array size does not match host vertex count");
  EliminationForest f;
  f.host = std::move(host);
  f.parent = std::move(parent);
  for (int v = 0; v < n; ++v) {
    if (f.parent[v] < -1 || f.parent[v] >= n)
      throw validation_error("parent of vertex " + std::to_string(v) + " out of range");
    if (f.parent[v] == -1) f.roots.push_back(v);
  }
  int cycle_vertex = -1;
  std::vector<int> depth = compute_depths(f.parent, &cycle_vertex);
  if (cycle_vertex != -1)
    throw validation_error("cycle in parent links involving vertex " +
                           std::to_string(cycle_vertex));
  f.vertex_height = n == 0 ? 0 : *std::max_element(depth.begin(), depth.end());
  return f;
}

ForestCheck validate_elimination_forest(const EliminationForest& f) {
  const int n = f.host.vertex_count();
  if (static_cast<int>(f.parent.size()) != n)
    return {false, "parent array size does not match host vertex count"};
  for (int v = 0; v < n; ++v) {
    if (f.parent[v] < -1 || f.parent[v] >= n)
      return {false, "parent of vertex " + std::to_string(v) + " out of range"};
    if (f.parent[v] == v)
      return {false, "vertex " + std::to_string(v) + " is its own parent"};
  }
  int cycle_vertex = -1;
  std::vector<int> depth = compute_depths(f.parent, &cycle_vertex);
  if (cycle_vertex != -1)
    return {false,
            "cycle in parent links involving vertex " + std::to_string(cycle_vertex)};

  std::vector<int> expected_roots;
  for (int v = 0; v < n; ++v)
    if (f.parent[v] == -1) expected_roots.push_back(v);
  if (f.roots != expected_roots)
    return {false, "root list does not match vertices with parent -1"};

  // Every host edge must join an ancestor-descendant pair.
  for (auto [u, v] : f.host.edges()) {
    int a = u, b = v;
    while (depth[a] > depth[b]) a = f.parent[a];
    while (depth[b] > depth[a]) b = f.parent[b];
    if (a != b)
      return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " joins incomparable vertices"};
  }

  int height = 0;
  for (int v = 0; v < n; ++v) height = std::max(height, depth[v]);
  if (f.vertex_height != height)
    return {false, "vertex_height " + std::to_string(f.vertex_height) +
                       " does not match recomputed height " + std::to_string(height)};
  return {true, ""};
}

}  // namespace cycledepth
