#include "cycledepth/harness.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cycledepth/block_tree.hpp"
#include "cycledepth/constructive.hpp"
#include "cycledepth/errors.hpp"
#include "cycledepth/io.hpp"
#include "cycledepth/vertex_set.hpp"

namespace cycledepth {
namespace {

constexpr double kDefaultEdgeDensity = 0.2;
constexpr std::uint64_t kDensityScale = 1u << 24;

// All raw draws go through `eng() % k`: std::uniform_int_distribution is not
// pinned down by the standard, and reports must be byte-identical.
std::uint64_t draw(std::mt19937_64& eng, std::uint64_t k) { return eng() % k; }

std::uint64_t density_threshold(const GeneratorSpec& spec) {
  const double d = spec.edge_density.value_or(kDefaultEdgeDensity);
  if (d < 0.0 || d > 1.0)
    throw precondition_error("edge_density must lie in [0, 1]");
  return static_cast<std::uint64_t>(std::llround(d * static_cast<double>(kDensityScale)));
}

Graph make_from_matrix(int n, const std::vector<char>& adj) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[static_cast<std::size_t>(u) * n + v]) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph gen_random_connected(const GeneratorSpec& spec) {
  if (spec.n < 1) throw precondition_error("random_connected needs n >= 1");
  const int n = spec.n;
  std::mt19937_64 eng(spec.seed);
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  auto link = [&](int u, int v) {
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
  };
  for (int v = 1; v < n; ++v) link(static_cast<int>(draw(eng, v)), v);
  const std::uint64_t threshold = density_threshold(spec);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[static_cast<std::size_t>(u) * n + v] &&
          draw(eng, kDensityScale) < threshold)
        link(u, v);
  return make_from_matrix(n, adj);
}

// Ear decomposition: a cycle, then paths glued at two distinct existing
// vertices until all n vertices are used, then a chord sprinkle. 2-connected
// by construction.
Graph gen_random_2connected(const GeneratorSpec& spec) {
  if (spec.n < 3) throw precondition_error("random_2connected needs n >= 3");
  const int n = spec.n;
  std::mt19937_64 eng(spec.seed);
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  auto link = [&](int u, int v) {
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
  };
  const int cycle_len = 3 + static_cast<int>(draw(eng, static_cast<std::uint64_t>(n - 2)));
  for (int v = 0; v < cycle_len; ++v) link(v, (v + 1) % cycle_len);
  int used = cycle_len;
  while (used < n) {
    const int internal = 1 + static_cast<int>(draw(eng, static_cast<std::uint64_t>(n - used)));
    const int e1 = static_cast<int>(draw(eng, used));
    const int e2 = (e1 + 1 + static_cast<int>(draw(eng, used - 1))) % used;
    int prev = e1;
    for (int i = 0; i < internal; ++i) {
      link(prev, used + i);
      prev = used + i;
    }
    link(prev, e2);
    used += internal;
  }
  const std::uint64_t threshold = density_threshold(spec);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[static_cast<std::size_t>(u) * n + v] &&
          draw(eng, kDensityScale) < threshold)
        link(u, v);
  return make_from_matrix(n, adj);
}

void enumerate_connected(int n, const std::function<void(const Graph&, std::uint64_t)>& f) {
  if (n < 1) throw precondition_error("enumerate_all needs n >= 1");
  if (n > kEnumerationLimit)
    throw size_limit_error("enumeration", n, kEnumerationLimit);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const std::uint64_t all = low_bits(n);
  std::uint64_t index = 0;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint64_t nb[kEnumerationLimit] = {};
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& [u, v] = pairs[std::countr_zero(m)];
      nb[u] |= std::uint64_t{1} << v;
      nb[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t comp = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= nb[std::countr_zero(m)];
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    if (comp != all) continue;
    edges.clear();
    for (std::uint64_t m = mask; m; m &= m - 1) edges.push_back(pairs[std::countr_zero(m)]);
    f(Graph::from_edges(n, edges), index++);
  }
}

nlohmann::ordered_json opt_json(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string edge_name(int a, int b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

GraphRecord verify_one(const Graph& g, std::uint64_t index, const VerifyOptions& o) {
  GraphRecord r;
  r.index = index;
  r.graph6 = to_graph6(g);
  r.n = g.vertex_count();
  r.edges = g.edge_count();
  r.connected = is_connected(g);
  r.two_connected = is_two_connected(g);

  const int td_cap = std::min(o.treedepth_limit, kTreedepthHardLimit);
  const int tw_cap = std::min(o.treewidth_limit, kTreewidthHardLimit);
  if (r.n > td_cap) {
    r.skipped = true;
    r.skip_reason = "treedepth solver limit " + std::to_string(td_cap) +
                    " below n = " + std::to_string(r.n);
    return r;
  }
  if (o.checks.needs_treewidth() && r.n > tw_cap) {
    r.skipped = true;
    r.skip_reason = "treewidth solver limit " + std::to_string(tw_cap) +
                    " below n = " + std::to_string(r.n);
    return r;
  }

  CycleOptions copts = o.cycle_options;
  copts.threads = 1;  // parallelism lives at the per-graph level

  TreedepthSolver solver(g, td_cap);
  const VertexSet full = g.full_set();
  const int td = solver.treedepth();
  r.treedepth = td;
  r.circumference = circumference(g, copts);
  if (r.circumference) r.slack = *r.circumference - td;
  if (o.checks.needs_treewidth()) r.treewidth = treewidth_exact(g, tw_cap, 1);

  ExtractionOptions ex;
  ex.solver = &solver;

  if (o.checks.thm12 && r.two_connected) {
    if (!r.circumference || *r.circumference < td)
      r.failures.push_back("thm12: treedepth exceeds circumference");
    int min_cycle = INT_MAX;
    for (auto [a, b] : g.edges()) {
      try {
        CycleCertificate cert = long_cycle_through_edge(g, a, b, ex);
        std::string why;
        if (!cert.cycle.valid_in(g, &why))
          r.failures.push_back("thm12: invalid cycle on edge " + edge_name(a, b) + ": " + why);
        else if (!cert.cycle.contains_edge(a, b))
          r.failures.push_back("thm12: cycle misses edge " + edge_name(a, b));
        else if (cert.treedepth != td)
          r.failures.push_back("thm12: certificate treedepth mismatch on edge " + edge_name(a, b));
        else if (cert.cycle.length() < td)
          r.failures.push_back("thm12: cycle of length " + std::to_string(cert.cycle.length()) +
                               " < td " + std::to_string(td) + " on edge " + edge_name(a, b));
        min_cycle = std::min(min_cycle, cert.cycle.length());
      } catch (const std::exception& e) {
        r.failures.push_back("thm12: extraction failed on edge " + edge_name(a, b) + ": " +
                             e.what());
      }
    }
    if (min_cycle != INT_MAX) r.min_certificate_cycle = min_cycle;
  }

  if (o.checks.thm11 && r.circumference) {
    if (*r.treewidth > *r.circumference - 1)
      r.failures.push_back("thm11: treewidth " + std::to_string(*r.treewidth) +
                           " > circumference - 1 = " + std::to_string(*r.circumference - 1));
  }

  if (o.checks.lemma31 && r.connected && r.n >= 2) {
    for (int x0 = 0; x0 < r.n; ++x0) {
      try {
        BlockTreePath p = block_tree_path(g, x0, ex);
        bool shape = !p.blocks.empty() && p.blocks.front().contains(x0) &&
                     p.cutvertices.size() + 1 == p.blocks.size();
        for (std::size_t i = 1; shape && i < p.blocks.size(); ++i)
          shape = p.blocks[i - 1].contains(p.cutvertices[i - 1]) &&
                  p.blocks[i].contains(p.cutvertices[i - 1]);
        if (!shape) {
          r.failures.push_back("lemma31: malformed path at x0 = " + std::to_string(x0));
          continue;
        }
        int sum = 0;
        for (std::size_t i = 0; i < p.blocks.size(); ++i)
          sum += solver.treedepth(
              p.blocks[i].without(i == 0 ? x0 : p.cutvertices[i - 1]));
        const int need = solver.treedepth(full.without(x0));
        if (sum < need)
          r.failures.push_back("lemma31: sum " + std::to_string(sum) + " < td(G - " +
                               std::to_string(x0) + ") = " + std::to_string(need));
      } catch (const std::exception& e) {
        r.failures.push_back("lemma31: failed at x0 = " + std::to_string(x0) + ": " + e.what());
      }
    }
  }

  if (o.checks.lemma32 && (r.two_connected || (r.n == 2 && r.edges == 1))) {
    for (int a = 0; a < r.n; ++a) {
      for (int b = 0; b < r.n; ++b) {
        if (a == b) continue;
        try {
          Path p = long_ab_path(g, a, b, ex);
          std::string why;
          const int need = solver.treedepth(full.without(b));
          if (!p.valid_in(g, &why))
            r.failures.push_back("lemma32: invalid path " + edge_name(a, b) + ": " + why);
          else if (p.vertices.front() != a || p.vertices.back() != b)
            r.failures.push_back("lemma32: wrong endpoints for " + edge_name(a, b));
          else if (p.length() < need)
            r.failures.push_back("lemma32: path length " + std::to_string(p.length()) +
                                 " < td(G - " + std::to_string(b) + ") = " + std::to_string(need));
        } catch (const std::exception& e) {
          r.failures.push_back("lemma32: failed on " + edge_name(a, b) + ": " + e.what());
        }
      }
    }
  }

  if (o.checks.monotonicity) {
    for (int x = 0; x < r.n; ++x) {
      const int reduced = solver.treedepth(full.without(x));
      if (td > reduced + 1)
        r.failures.push_back("monotonicity: td " + std::to_string(td) + " > td(G - " +
                             std::to_string(x) + ") + 1 = " + std::to_string(reduced + 1));
    }
  }

  if (o.checks.block_law && r.connected && r.n >= 2) {
    try {
      BlockTree t = block_decomposition(g);
      int widest = 0;
      for (int b = 0; b < t.block_count(); ++b) {
        InducedSubgraph sub = induced_subgraph(g, t.block(b));
        widest = std::max(widest, treewidth_exact(sub.graph, tw_cap, 1));
      }
      if (*r.treewidth != widest)
        r.failures.push_back("block_law: tw " + std::to_string(*r.treewidth) +
                             " != max block tw " + std::to_string(widest));
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("block_law: failed: ") + e.what());
    }
  }

  return r;
}

void finalize(VerificationReport* rep) {
  const CheckSet& c = rep->checks;
  for (const GraphRecord& r : rep->records) {
    ++rep->graphs;
    if (r.skipped) {
      ++rep->skipped;
      continue;
    }
    bool applicable = false, inapplicable = false;
    auto mark = [&](bool selected, bool applies) {
      if (!selected) return;
      (applies ? applicable : inapplicable) = true;
    };
    mark(c.thm12, r.two_connected);
    mark(c.thm11, true);
    mark(c.lemma31, r.connected && r.n >= 2);
    mark(c.lemma32, r.two_connected || (r.n == 2 && r.edges == 1));
    mark(c.monotonicity, r.n >= 1);
    mark(c.block_law, r.connected && r.n >= 2);
    if (applicable) ++rep->checked;
    if (inapplicable) ++rep->not_applicable;
    if (!r.failures.empty()) rep->failure_graph6.push_back(r.graph6);
  }
}

}  // namespace

GeneratorModel parse_generator_model(const std::string& name) {
  if (name == "complete") return GeneratorModel::complete;
  if (name == "cycle") return GeneratorModel::cycle;
  if (name == "path_plus_triangle") return GeneratorModel::path_plus_triangle;
  if (name == "random_2connected") return GeneratorModel::random_2connected;
  if (name == "random_connected") return GeneratorModel::random_connected;
  if (name == "enumerate_all") return GeneratorModel::enumerate_all;
  throw parse_error("unknown generator model \"" + name + "\"");
}

std::string to_string(GeneratorModel m) {
  switch (m) {
    case GeneratorModel::complete: return "complete";
    case GeneratorModel::cycle: return "cycle";
    case GeneratorModel::path_plus_triangle: return "path_plus_triangle";
    case GeneratorModel::random_2connected: return "random_2connected";
    case GeneratorModel::random_connected: return "random_connected";
    case GeneratorModel::enumerate_all: return "enumerate_all";
  }
  return "?";
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case GeneratorModel::complete: {
      if (spec.n < 1) throw precondition_error("complete needs n >= 1");
      std::vector<Edge> edges;
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) edges.push_back({u, v});
      return Graph::from_edges(spec.n, edges);
    }
    case GeneratorModel::cycle: {
      if (spec.n < 3) throw precondition_error("cycle needs n >= 3");
      std::vector<Edge> edges;
      for (int v = 0; v < spec.n; ++v) edges.push_back({v, (v + 1) % spec.n});
      for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
      return Graph::from_edges(spec.n, edges);
    }
    case GeneratorModel::path_plus_triangle: {
      if (spec.n < 3) throw precondition_error("path_plus_triangle needs n >= 3");
      std::vector<Edge> edges;
      for (int v = 0; v + 1 < spec.n; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, 2});  // the triangle 0-1-2
      return Graph::from_edges(spec.n, edges);
    }
    case GeneratorModel::random_2connected: return gen_random_2connected(spec);
    case GeneratorModel::random_connected: return gen_random_connected(spec);
    case GeneratorModel::enumerate_all:
      throw precondition_error("enumerate_all denotes a stream, not a single graph");
  }
  throw precondition_error("unknown generator model");
}

void for_each_graph(const GeneratorSpec& spec, int count,
                    const std::function<void(const Graph&, std::uint64_t)>& f) {
  switch (spec.model) {
    case GeneratorModel::complete:
    case GeneratorModel::cycle:
    case GeneratorModel::path_plus_triangle:
      f(generate(spec), 0);
      return;
    case GeneratorModel::random_2connected:
    case GeneratorModel::random_connected: {
      for (int i = 0; i < count; ++i) {
        GeneratorSpec task = spec;
        task.seed = spec.seed ^ static_cast<std::uint64_t>(i);
        f(generate(task), static_cast<std::uint64_t>(i));
      }
      return;
    }
    case GeneratorModel::enumerate_all:
      enumerate_connected(spec.n, f);
      return;
  }
}

CheckSet CheckSet::parse(const std::string& csv) {
  CheckSet out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string name = csv.substr(pos, comma - pos);
    const std::size_t at = pos;
    pos = comma + 1;
    // trim
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name.empty()) {
      if (comma == csv.size()) break;
      continue;
    }
    if (name == "thm12") out.thm12 = true;
    else if (name == "thm11") out.thm11 = true;
    else if (name == "lemma31") out.lemma31 = true;
    else if (name == "lemma32") out.lemma32 = true;
    else if (name == "monotonicity") out.monotonicity = true;
    else if (name == "block_law") out.block_law = true;
    else throw parse_error("unknown check \"" + name + "\"", static_cast<long>(at));
    if (comma == csv.size()) break;
  }
  return out;
}

std::string CheckSet::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(thm12, "thm12");
  add(thm11, "thm11");
  add(lemma31, "lemma31");
  add(lemma32, "lemma32");
  add(monotonicity, "monotonicity");
  add(block_law, "block_law");
  return out;
}

bool CheckSet::any() const {
  return thm12 || thm11 || lemma31 || lemma32 || monotonicity || block_law;
}

VerificationReport verify_corpus(const std::vector<Graph>& graphs,
                                 const VerifyOptions& opts) {
  VerificationReport rep;
  rep.checks = opts.checks;
  rep.records.resize(graphs.size());
  const auto count = static_cast<std::int64_t>(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads > 0 ? opts.threads : 1) if (opts.threads > 1)
#endif
  for (std::int64_t i = 0; i < count; ++i)
    rep.records[i] = verify_one(graphs[i], static_cast<std::uint64_t>(i), opts);
  finalize(&rep);
  return rep;
}

VerificationReport verify_corpus(const GeneratorSpec& spec, int count,
                                 const VerifyOptions& opts) {
  VerificationReport rep;
  rep.checks = opts.checks;
  if (opts.threads <= 1) {
    for_each_graph(spec, count, [&](const Graph& g, std::uint64_t index) {
      rep.records.push_back(verify_one(g, index, opts));
    });
  } else {
    // Chunked so enumeration streams: bounded memory, fixed record order.
    constexpr std::size_t kChunk = 4096;
    std::vector<Graph> buffer;
    std::vector<std::uint64_t> indices;
    auto flush = [&]() {
      const std::size_t base = rep.records.size();
      rep.records.resize(base + buffer.size());
      const auto chunk = static_cast<std::int64_t>(buffer.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
#endif
      for (std::int64_t i = 0; i < chunk; ++i)
        rep.records[base + i] = verify_one(buffer[i], indices[i], opts);
      buffer.clear();
      indices.clear();
    };
    for_each_graph(spec, count, [&](const Graph& g, std::uint64_t index) {
      buffer.push_back(g);
      indices.push_back(index);
      if (buffer.size() >= kChunk) flush();
    });
    flush();
  }
  finalize(&rep);
  return rep;
}

std::string VerificationReport::to_jsonl() const {
  std::string out;
  for (const GraphRecord& r : records) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["connected"] = r.connected;
    j["two_connected"] = r.two_connected;
    j["treedepth"] = opt_json(r.treedepth);
    j["treewidth"] = opt_json(r.treewidth);
    j["circumference"] = opt_json(r.circumference);
    j["min_certificate_cycle"] = opt_json(r.min_certificate_cycle);
    j["slack"] = opt_json(r.slack);
    j["skipped"] = r.skipped;
    if (r.skipped) j["skip_reason"] = r.skip_reason;
    j["failures"] = r.failures;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "checks: " << (checks.any() ? checks.to_string() : "(none)") << "\n"
     << "graphs " << graphs << ", checked " << checked << ", skipped " << skipped
     << ", not applicable " << not_applicable << ", failures " << failure_graph6.size()
     << "\n";
  for (const std::string& g6 : failure_graph6) os << "  counterexample " << g6 << "\n";
  return os.str();
}

std::vector<BoundRow> bound_table(int k_max) {
  if (k_max < 3) throw precondition_error("k_max must be at least 3");
  std::vector<BoundRow> rows;
  for (int k = 3; k <= k_max; ++k) {
    const long long kk = k;
    BoundRow row;
    row.k = k;
    row.dirac = (kk * kk + 1) / 2;
    row.marshall_wood = (kk / 2) * (kk - 1) + 1;
    row.circumference = kk;
    row.dominance = row.circumference <= row.marshall_wood && row.marshall_wood <= row.dirac;
    rows.push_back(row);
  }
  return rows;
}

std::vector<TightGraph> tightness_scan(int n_max) {
  if (n_max < 3) throw precondition_error("n_max must be at least 3");
  if (n_max > kEnumerationLimit)
    throw size_limit_error("tightness scan", n_max, kEnumerationLimit);
  std::vector<TightGraph> out;
  for (int n = 3; n <= n_max; ++n) {
    GeneratorSpec spec;
    spec.model = GeneratorModel::enumerate_all;
    spec.n = n;
    for_each_graph(spec, 0, [&](const Graph& g, std::uint64_t) {
      if (!is_two_connected(g)) return;
      TreedepthSolver solver(g, n);
      const int td = solver.treedepth();
      auto circ = circumference(g);
      if (circ && *circ == td) out.push_back({to_graph6(g), n, td, *circ});
    });
  }
  return out;
}

}  // namespace cycledepth
