#ifndef CYCLEDEPTH_ELIMINATION_FOREST_HPP
#define CYCLEDEPTH_ELIMINATION_FOREST_HPP

#include <string>
#include <vector>

#include "cycledepth/graph.hpp"

namespace cycledepth {

// Rooted forest over V(host). Witnesses a treedepth upper bound when every
// host edge joins an ancestor-descendant pair; vertex_height counts vertices
// on the longest root-to-leaf path.
struct EliminationForest {
  Graph host;
  std::vector<int> parent;  // size n, -1 marks a root
  std::vector<int> roots;   // ascending
  int vertex_height = 0;
};

// Derives roots and vertex_height from a parent array. Throws
// validation_error if the parent links contain a cycle.
EliminationForest make_elimination_forest(Graph host, std::vector<int> parent);

struct ForestCheck {
  bool ok;
  std::string first_violation;  // empty when ok
};

// Checks every invariant: well-formed acyclic parent links, consistent root
// list, each edge joins an ancestor-descendant pair within one tree, and
// vertex_height matches a recomputation. Verdict-returning.
ForestCheck validate_elimination_forest(const EliminationForest& f);

}  // namespace cycledepth

#endif
