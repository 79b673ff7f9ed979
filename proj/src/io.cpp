#include "cycledepth/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "cycledepth/errors.hpp"

namespace cycledepth {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::unordered_map<long long, int> relabel;
  std::vector<int> pair_buf;
  size_t pos = 0;
  auto vertex_id = [&](long long raw) {
    auto [it, fresh] = relabel.try_emplace(raw, static_cast<int>(relabel.size()));
    (void)fresh;
    return it->second;
  };
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    size_t end = (eol == std::string_view::npos) ? text.size() : eol;
    std::string_view line = text.substr(pos, end - pos);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    pair_buf.clear();
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size()) break;
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || (ptr != line.data() + line.size() && !is_space(*ptr)))
        throw parse_error("malformed edge list token", static_cast<long>(pos + i));
      if (value < 0) throw parse_error("negative vertex id", static_cast<long>(pos + i));
      pair_buf.push_back(vertex_id(value));
      i = static_cast<size_t>(ptr - line.data());
    }
    if (!pair_buf.empty()) {
      if (pair_buf.size() != 2)
        throw parse_error("edge list line must hold exactly one \"u v\" pair",
                          static_cast<long>(pos));
      edges.emplace_back(pair_buf[0], pair_buf[1]);
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return Graph::from_edges(static_cast<int>(relabel.size()), edges);
}

Graph parse_graph6(std::string_view text) {
  size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) base = kGraph6Header.size();
  size_t end = text.size();
  while (end > base && (text[end - 1] == '\n' || is_space(text[end - 1]))) --end;
  std::string_view body = text.substr(base, end - base);
  if (body.empty()) throw parse_error("empty graph6 value", static_cast<long>(base));

  auto byte_at = [&](size_t i) -> int {
    if (i >= body.size())
      throw parse_error("graph6 value truncated", static_cast<long>(base + body.size()));
    unsigned char c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126)
      throw parse_error("invalid graph6 byte", static_cast<long>(base + i));
    return c - 63;
  };

  size_t i = 0;
  long long n;
  if (byte_at(0) < 63) {
    n = byte_at(0);
    i = 1;
  } else if (body.size() >= 2 && byte_at(1) < 63) {
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(k);
    i = 4;
  } else {
    n = 0;
    for (int k = 2; k <= 7; ++k) n = (n << 6) | byte_at(k);
    i = 8;
  }
  if (n > 1'000'000) throw parse_error("graph6 vertex count implausibly large", static_cast<long>(base));

  long long bits = n * (n - 1) / 2;
  size_t payload = static_cast<size_t>((bits + 5) / 6);
  if (body.size() != i + payload)
    throw parse_error("graph6 payload has wrong length", static_cast<long>(base + body.size()));

  std::vector<Edge> edges;
  long long bit = 0;
  int current = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (bit % 6 == 0) current = byte_at(i + static_cast<size_t>(bit / 6));
      if ((current >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  // Padding bits must be zero.
  for (; bit % 6 != 0; ++bit)
    if ((current >> (5 - bit % 6)) & 1)
      throw parse_error("nonzero graph6 padding bit", static_cast<long>(base + i + bit / 6));
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int k = 5; k >= 0; --k)
      out.push_back(static_cast<char>(((static_cast<long long>(n) >> (6 * k)) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::string_view text) {
  // Locate the first payload character (skipping blank/comment lines).
  size_t pos = 0;
  while (pos < text.size()) {
    size_t line_start = pos;
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos < text.size() && text[pos] != '\n' && text[pos] != '#') {
      unsigned char c = static_cast<unsigned char>(text[pos]);
      if (c >= 63 || text.substr(pos, kGraph6Header.size()) == kGraph6Header)
        return parse_graph6(text.substr(pos));
      return parse_edge_list(text);
    }
    size_t eol = text.find('\n', line_start);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return Graph();  // only whitespace/comments: the empty graph
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string to_dot(const Graph& g, const std::optional<DotHighlight>& highlight) {
  VertexSet marked_vertices(g.vertex_count());
  std::vector<Edge> marked_edges;
  if (highlight) {
    const auto& walk = highlight->vertices;
    if (highlight->closed) {
      Cycle c{walk};
      std::string why;
      if (!c.valid_in(g, &why)) throw validation_error("highlight: " + why);
    } else {
      Path p{walk};
      std::string why;
      if (!p.valid_in(g, &why)) throw validation_error("highlight: " + why);
    }
    for (int v : walk) marked_vertices.insert(v);
    size_t steps = highlight->closed ? walk.size() : walk.size() - 1;
    for (size_t i = 0; i < steps; ++i) {
      int a = walk[i], b = walk[(i + 1) % walk.size()];
      marked_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  auto edge_marked = [&](int u, int v) {
    return std::find(marked_edges.begin(), marked_edges.end(), Edge{u, v}) != marked_edges.end();
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (highlight && marked_vertices.contains(v)) out << " [color=red]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (edge_marked(u, v)) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cycledepth
