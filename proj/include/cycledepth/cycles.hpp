#ifndef CYCLEDEPTH_CYCLES_HPP
#define CYCLEDEPTH_CYCLES_HPP

#include <optional>

#include "cycledepth/graph.hpp"

namespace cycledepth {

inline constexpr int kDefaultCycleDpLimit = 18;
inline constexpr int kCycleDpHardLimit = 20;

struct CycleOptions {
  // Up to this many vertices the exact subset DP runs (hard-capped at
  // kCycleDpHardLimit by memory); beyond it a pruned backtracking search
  // takes over, which is exact but only practical when the graph is sparse
  // or its cycles are short.
  int dp_limit = kDefaultCycleDpLimit;
  int threads = 1;  // >1 spreads the DP across anchors with OpenMP
};

// Longest simple cycle; nullopt when the graph is a forest. Cycles are
// normalised to start at their smallest vertex, second vertex smaller than
// the last, so equal inputs yield byte-identical witnesses.
std::optional<Cycle> longest_cycle(const Graph& g, const CycleOptions& opts = {});

// Length of the longest cycle; nullopt for forests.
std::optional<int> circumference(const Graph& g, const CycleOptions& opts = {});

// Longest cycle using the edge ab; nullopt when no cycle contains it (ab is
// a bridge). Pre: ab is an edge of g.
std::optional<Cycle> longest_cycle_through_edge(const Graph& g, int a, int b,
                                                const CycleOptions& opts = {});

}  // namespace cycledepth

#endif
