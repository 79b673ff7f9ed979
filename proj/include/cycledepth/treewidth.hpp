#ifndef CYCLEDEPTH_TREEWIDTH_HPP
#define CYCLEDEPTH_TREEWIDTH_HPP

#include "cycledepth/graph.hpp"

namespace cycledepth {

inline constexpr int kDefaultTreewidthLimit = 18;
inline constexpr int kTreewidthHardLimit = 26;

// Exact treewidth via the elimination-ordering subset DP
//   TW(S) = min over v in S of max(TW(S - v), Q(S - v, v))
// where Q(S, v) counts the neighbours of the component of v in G[S + v]
// that lie outside it. Returns -1 for the empty graph.
//
// The serial form is the top-down memoized reference; the parallel form
// fills the table bottom-up one popcount layer at a time with OpenMP and
// must produce identical values (asserted by tests and the bench tool).
int treewidth_exact_serial(const Graph& g, int limit = kDefaultTreewidthLimit);
int treewidth_exact_parallel(const Graph& g, int limit = kDefaultTreewidthLimit,
                             int threads = 0);

// Dispatch: threads <= 1 runs the serial reference, otherwise the parallel
// kernel with the requested thread count.
int treewidth_exact(const Graph& g, int limit = kDefaultTreewidthLimit,
                    int threads = 1);

}  // namespace cycledepth

#endif
