#ifndef CYCLEDEPTH_IO_HPP
#define CYCLEDEPTH_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "cycledepth/graph.hpp"

namespace cycledepth {

// Edge list: one "u v" pair per line, whitespace-separated decimal, '#'
// comments. Vertex names are relabeled densely 0..n-1 in order of first
// appearance.
Graph parse_edge_list(std::string_view text);

// One graph6 value, optionally prefixed with ">>graph6<<". Trailing
// whitespace/newline tolerated.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

// Autodetects the format: decimal digits cannot start a graph6 byte, so a
// first payload character >= '?' (0x3f) means graph6. Empty text is the empty
// graph.
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);

struct DotHighlight {
  std::vector<int> vertices;  // walk; closed=true draws the wrap-around edge
  bool closed = false;
};

// Deterministic DOT: nodes then edges, ascending. Highlighted vertices and
// edges carry a distinct attribute. Throws validation_error if the highlight
// is not a valid path/cycle of g.
std::string to_dot(const Graph& g, const std::optional<DotHighlight>& highlight = std::nullopt);

}  // namespace cycledepth

#endif
