// Command-line front end: solvers, certificate extraction, corpus
// verification. Exit codes: 0 ok, 1 counterexample found, 2 usage/IO error.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycledepth/block_tree.hpp"
#include "cycledepth/constructive.hpp"
#include "cycledepth/cycles.hpp"
#include "cycledepth/errors.hpp"
#include "cycledepth/harness.hpp"
#include "cycledepth/io.hpp"
#include "cycledepth/treedepth.hpp"
#include "cycledepth/treewidth.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cycledepth;

// Distinguishes "could not get a graph in" (exit 2) from invariant failures
// discovered while checking one (exit 1).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) {
  const std::string text = read_all(path);
  try {
    return parse_graph(text);
  } catch (const std::exception& e) {
    throw input_error("bad graph input: " + std::string(e.what()));
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write \"" + path + "\"");
  out << text;
}

Edge parse_edge_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw input_error("--edge expects \"a,b\"");
  try {
    std::size_t used = 0;
    const int a = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw input_error("--edge expects \"a,b\" with decimal vertex ids");
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

ordered_json forest_json(const EliminationForest& f) {
  ordered_json j;
  j["parent"] = f.parent;
  j["roots"] = f.roots;
  j["vertex_height"] = f.vertex_height;
  return j;
}

std::string block_tree_dot(const BlockTree& t) {
  std::ostringstream os;
  os << "graph blocktree {\n";
  for (int b = 0; b < t.block_count(); ++b)
    os << "  b" << b << " [shape=box, label=\"B" << b << ": "
       << join(t.block(b).to_vector()) << "\"];\n";
  t.cutvertices().for_each([&](int x) {
    os << "  c" << x << " [label=\"cut " << x << "\"];\n";
  });
  for (int b = 0; b < t.block_count(); ++b)
    for (int x : t.cutvertices_of_block(b)) os << "  b" << b << " -- c" << x << ";\n";
  os << "}\n";
  return os.str();
}

int cmd_blocks(const std::string& file, bool json) {
  Graph g = load_graph(file);
  BlockTree t = block_decomposition(g);
  std::vector<Edge> bridge_list = t.bridge_edges();
  if (json) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    ordered_json blocks = ordered_json::array();
    for (int b = 0; b < t.block_count(); ++b) blocks.push_back(t.block(b).to_vector());
    j["blocks"] = blocks;
    j["cutvertices"] = t.cutvertices().to_vector();
    ordered_json br = ordered_json::array();
    for (auto [u, v] : bridge_list) br.push_back({u, v});
    j["bridges"] = br;
    j["dot"] = block_tree_dot(t);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "blocks:\n";
  for (int b = 0; b < t.block_count(); ++b)
    std::cout << "  B" << b << ": " << join(t.block(b).to_vector()) << "\n";
  std::cout << "cutvertices: " << join(t.cutvertices().to_vector()) << "\n";
  std::cout << "bridges:";
  for (auto [u, v] : bridge_list) std::cout << " " << u << "-" << v;
  std::cout << "\n" << block_tree_dot(t);
  return 0;
}

int cmd_td(const std::string& file, int limit, bool json) {
  Graph g = load_graph(file);
  TreedepthResult r = treedepth_exact(g, limit);
  if (json) {
    ordered_json j;
    j["treedepth"] = r.value;
    j["forest"] = forest_json(r.forest);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "treedepth: " << r.value << "\n"
            << "parent: " << join(r.forest.parent) << "\n"
            << "roots: " << join(r.forest.roots) << "\n";
  return 0;
}

int cmd_tw(const std::string& file, int limit, int threads, bool json) {
  Graph g = load_graph(file);
  const int tw = treewidth_exact(g, limit, threads);
  if (json) {
    ordered_json j;
    j["treewidth"] = tw;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "treewidth: " << tw << "\n";
  }
  return 0;
}

int cmd_circ(const std::string& file, int limit, int threads, bool json,
             const std::string& dot) {
  Graph g = load_graph(file);
  CycleOptions opts;
  opts.dp_limit = limit;
  opts.threads = threads;
  std::optional<Cycle> c = longest_cycle(g, opts);
  if (json) {
    ordered_json j;
    if (c) {
      j["circumference"] = c->length();
      j["cycle"] = c->vertices;
    } else {
      j["circumference"] = nullptr;
      j["acyclic"] = true;
    }
    std::cout << j.dump(2) << "\n";
  } else if (c) {
    std::cout << "circumference: " << c->length() << "\n"
              << "cycle: " << join(c->vertices) << "\n";
  } else {
    std::cout << "circumference: +inf (acyclic; treewidth bound vacuous)\n";
  }
  if (!dot.empty()) {
    std::optional<DotHighlight> h;
    if (c) h = DotHighlight{c->vertices, true};
    write_file(dot, to_dot(g, h));
  }
  return 0;
}

int cmd_cycle(const std::string& file, const std::string& edge_text, int limit,
              bool check, bool json, const std::string& dot) {
  Graph g = load_graph(file);
  auto [a, b] = parse_edge_flag(edge_text);
  if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
    throw input_error("--edge endpoints out of range");
  if (!g.has_edge(a, b)) throw input_error("--edge is not an edge of the graph");
  ExtractionOptions opts;
  opts.treedepth_limit = limit;
  opts.check_with_oracles = check;
  CycleCertificate cert = long_cycle_through_edge(g, a, b, opts);
  if (json) {
    ordered_json j;
    j["edge"] = {cert.edge.first, cert.edge.second};
    j["treedepth"] = cert.treedepth;
    j["length"] = cert.cycle.length();
    j["cycle"] = cert.cycle.vertices;
    ordered_json segs = ordered_json::array();
    for (const Path& p : cert.segment_paths) segs.push_back(p.vertices);
    j["segments"] = segs;
    j["closing_vertex"] = cert.closing_vertex;
    j["checked"] = check;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "edge: " << cert.edge.first << "-" << cert.edge.second << "\n"
              << "treedepth: " << cert.treedepth << "\n"
              << "cycle length: " << cert.cycle.length()
              << " (>= treedepth: " << (cert.cycle.length() >= cert.treedepth ? "yes" : "NO")
              << ")\n"
              << "cycle: " << join(cert.cycle.vertices) << "\n";
    for (std::size_t i = 0; i < cert.segment_paths.size(); ++i)
      std::cout << "segment " << i << ": " << join(cert.segment_paths[i].vertices) << "\n";
  }
  if (!dot.empty()) write_file(dot, to_dot(g, DotHighlight{cert.cycle.vertices, true}));
  return 0;
}

int cmd_verify(const std::string& model_name, int n, std::uint64_t seed, int count,
               std::optional<double> density, const std::string& checks_csv,
               const std::string& input, const std::string& out, int threads,
               int td_limit, int tw_limit) {
  VerifyOptions opts;
  opts.checks = CheckSet::parse(checks_csv);
  if (!opts.checks.any()) throw input_error("--checks selected nothing");
  opts.threads = threads;
  opts.treedepth_limit = td_limit;
  opts.treewidth_limit = tw_limit;

  VerificationReport rep;
  if (!input.empty()) {
    std::vector<Graph> corpus;
    std::istringstream lines(read_all(input));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        corpus.push_back(parse_graph6(line));
      } catch (const std::exception& e) {
        throw input_error(input + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    rep = verify_corpus(corpus, opts);
  } else {
    GeneratorSpec spec;
    spec.model = parse_generator_model(model_name);
    spec.n = n;
    spec.seed = seed;
    spec.edge_density = density;
    rep = verify_corpus(spec, count, opts);
  }

  if (!out.empty()) write_file(out, rep.to_jsonl());
  std::cout << rep.summary();
  return rep.ok() ? 0 : 1;
}

int cmd_bounds(int k_max, bool json) {
  std::vector<BoundRow> rows = bound_table(k_max);
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const BoundRow& r : rows) {
      ordered_json j;
      j["k"] = r.k;
      j["dirac"] = r.dirac;
      j["marshall_wood"] = r.marshall_wood;
      j["circumference"] = r.circumference;
      j["dominance"] = r.dominance;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << std::setw(4) << "k" << std::setw(10) << "dirac" << std::setw(16)
            << "marshall_wood" << std::setw(16) << "circumference" << std::setw(11)
            << "dominance" << "\n";
  bool all = true;
  for (const BoundRow& r : rows) {
    std::cout << std::setw(4) << r.k << std::setw(10) << r.dirac << std::setw(16)
              << r.marshall_wood << std::setw(16) << r.circumference << std::setw(11)
              << (r.dominance ? "yes" : "NO") << "\n";
    all = all && r.dominance;
  }
  return all ? 0 : 1;
}

int cmd_tightness(int n_max, bool json) {
  std::vector<TightGraph> tight = tightness_scan(n_max);
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const TightGraph& t : tight) {
      ordered_json j;
      j["graph6"] = t.graph6;
      j["n"] = t.n;
      j["treedepth"] = t.treedepth;
      j["circumference"] = t.circumference;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << "tight 2-connected graphs (treedepth = circumference), n <= " << n_max
            << ":\n";
  for (const TightGraph& t : tight)
    std::cout << "  " << t.graph6 << "  n=" << t.n << " td=" << t.treedepth
              << " circ=" << t.circumference << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treedepth-vs-circumference toolkit: exact solvers, cycle "
               "certificates, corpus verification"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file = "-";
  bool json = false;
  std::string dot;

  auto* blocks = app.add_subcommand("blocks", "block decomposition of a connected graph");
  blocks->add_option("file", file, "graph file (edge list or graph6; \"-\" = stdin)");
  blocks->add_flag("--json", json, "machine-readable output");
  blocks->callback([&]() { rc = cmd_blocks(file, json); });

  int td_limit = kDefaultTreedepthLimit;
  auto* td = app.add_subcommand("td", "exact treedepth with elimination-forest witness");
  td->add_option("file", file, "graph file (edge list or graph6; \"-\" = stdin)");
  td->add_option("--limit", td_limit, "exact-solver vertex limit");
  td->add_flag("--json", json, "machine-readable output");
  td->callback([&]() { rc = cmd_td(file, td_limit, json); });

  int tw_limit = kDefaultTreewidthLimit;
  int threads = 1;
  auto* tw = app.add_subcommand("tw", "exact treewidth");
  tw->add_option("file", file, "graph file (edge list or graph6; \"-\" = stdin)");
  tw->add_option("--limit", tw_limit, "exact-solver vertex limit");
  tw->add_option("--threads", threads, "OpenMP threads (1 = serial)");
  tw->add_flag("--json", json, "machine-readable output");
  tw->callback([&]() { rc = cmd_tw(file, tw_limit, threads, json); });

  int dp_limit = kDefaultCycleDpLimit;
  auto* circ = app.add_subcommand("circ", "circumference with longest-cycle witness");
  circ->add_option("file", file, "graph file (edge list or graph6; \"-\" = stdin)");
  circ->add_option("--limit", dp_limit, "subset-DP vertex limit (search fallback above)");
  circ->add_option("--threads", threads, "OpenMP threads (1 = serial)");
  circ->add_flag("--json", json, "machine-readable output");
  circ->add_option("--dot", dot, "write DOT with the cycle highlighted");
  circ->callback([&]() { rc = cmd_circ(file, dp_limit, threads, json, dot); });

  std::string edge_text;
  bool check = false;
  auto* cycle = app.add_subcommand("cycle", "certified long cycle through an edge");
  cycle->add_option("file", file, "graph file (edge list or graph6; \"-\" = stdin)");
  cycle->add_option("--edge", edge_text, "edge \"a,b\"")->required();
  cycle->add_option("--limit", td_limit, "treedepth-solver vertex limit");
  cycle->add_flag("--check", check, "verify every intermediate inequality with exact oracles");
  cycle->add_flag("--json", json, "machine-readable output");
  cycle->add_option("--dot", dot, "write DOT with the cycle highlighted");
  cycle->callback([&]() { rc = cmd_cycle(file, edge_text, td_limit, check, json, dot); });

  std::string model = "random_2connected";
  int n = 8;
  std::uint64_t seed = 0;
  int count = 1;
  double density = -1.0;
  std::string checks = "thm12,thm11,lemma31,lemma32,monotonicity,block_law";
  std::string input, out;
  int vt_td_limit = kTreedepthHardLimit;
  int vt_tw_limit = kDefaultTreewidthLimit;
  auto* verify = app.add_subcommand("verify", "run selected checks over a graph corpus");
  verify->add_option("--model", model,
                     "generator: complete|cycle|path_plus_triangle|random_2connected|"
                     "random_connected|enumerate_all");
  verify->add_option("--n", n, "vertex count for the generator");
  verify->add_option("--seed", seed, "base seed (task i uses seed XOR i)");
  verify->add_option("--count", count, "number of random graphs");
  verify->add_option("--edge-density", density, "chord density in [0,1] for random models");
  verify->add_option("--checks", checks,
                     "comma list of thm12,thm11,lemma31,lemma32,monotonicity,block_law");
  verify->add_option("--input", input, "graph6 corpus file, one graph per line (overrides --model)");
  verify->add_option("--out", out, "write the JSONL report here");
  verify->add_option("--threads", threads, "parallel per-graph verification");
  verify->add_option("--td-limit", vt_td_limit, "skip graphs above this treedepth-solver size");
  verify->add_option("--tw-limit", vt_tw_limit, "skip graphs above this treewidth-solver size");
  verify->callback([&]() {
    std::optional<double> d;
    if (density >= 0.0) d = density;
    rc = cmd_verify(model, n, seed, count, d, checks, input, out, threads, vt_td_limit,
                    vt_tw_limit);
  });

  int k_max = 12;
  auto* bounds = app.add_subcommand("bounds", "treedepth-bound comparison table");
  bounds->add_option("--kmax", k_max, "largest circumference k");
  bounds->add_flag("--json", json, "machine-readable output");
  bounds->callback([&]() { rc = cmd_bounds(k_max, json); });

  int n_max = 6;
  auto* tightness = app.add_subcommand("tightness", "2-connected graphs with treedepth = circumference");
  tightness->add_option("--nmax", n_max, "enumerate all 2-connected graphs up to this order");
  tightness->add_flag("--json", json, "machine-readable output");
  tightness->callback([&]() { rc = cmd_tightness(n_max, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
