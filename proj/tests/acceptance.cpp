// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Heavy sweeps stream graphs and share one treedepth solver per graph.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cycledepth/block_tree.hpp"
#include "cycledepth/constructive.hpp"
#include "cycledepth/cycles.hpp"
#include "cycledepth/graph.hpp"
#include "cycledepth/harness.hpp"
#include "cycledepth/io.hpp"
#include "cycledepth/treedepth.hpp"
#include "cycledepth/treewidth.hpp"
#include "cycledepth/vertex_set.hpp"
#include "oracles.hpp"

using namespace cycledepth;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(Clock::time_point t0) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << secs(t0) << "s";
  return os.str();
}

// Remembers only the first failure; sweeps can be millions of cases deep.
struct Failures {
  long long count = 0;
  std::string first;
  void add(std::string what) {
    if (count++ == 0) first = std::move(what);
  }
  std::string detail() const { return count ? "; first: " + first : ""; }
};

std::string ename(int a, int b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

Graph ring(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  e.push_back({0, n - 1});
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.push_back({u, v});
  return Graph::from_edges(a + b, e);
}

Graph cube() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) e.push_back({v, v ^ bit});
  return Graph::from_edges(8, e);
}

void for_connected(int n, const std::function<void(const Graph&)>& f) {
  GeneratorSpec spec;
  spec.model = GeneratorModel::enumerate_all;
  spec.n = n;
  for_each_graph(spec, 0, [&](const Graph& g, std::uint64_t) { f(g); });
}

// Every labeled graph on n vertices, connected or not.
void for_all_labeled(int n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::uint64_t m = mask; m; m &= m - 1)
      edges.push_back(pairs[std::countr_zero(m)]);
    f(Graph::from_edges(n, edges));
  }
}

Graph random_graph(GeneratorModel model, int n, std::uint64_t seed,
                   std::optional<double> density = std::nullopt) {
  GeneratorSpec spec;
  spec.model = model;
  spec.n = n;
  spec.seed = seed;
  spec.edge_density = density;
  return generate(spec);
}

// Structured plus seeded graphs on 7 and 8 vertices for the oracle sweeps
// beyond the exhaustive sizes.
std::vector<Graph> medium_corpus() {
  std::vector<Graph> out;
  for (int n : {7, 8}) {
    out.push_back(ring(n));
    out.push_back(complete(n));
    out.push_back(path(n));
    GeneratorSpec ppt;
    ppt.model = GeneratorModel::path_plus_triangle;
    ppt.n = n;
    out.push_back(generate(ppt));
  }
  out.push_back(complete_bipartite(2, 5));
  out.push_back(complete_bipartite(3, 4));
  out.push_back(complete_bipartite(4, 4));
  out.push_back(cube());
  for (int n : {7, 8}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed)
      out.push_back(random_graph(GeneratorModel::random_connected, n, seed));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
      out.push_back(random_graph(GeneratorModel::random_2connected, n, seed));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      out.push_back(random_graph(GeneratorModel::random_2connected, n, seed, 0.5));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
      out.push_back(random_graph(GeneratorModel::random_connected, n, seed, 0.0));
  }
  return out;
}

int oracle_td_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) return 0;
  InducedSubgraph sub = induced_subgraph(g, s);
  return oracle::treedepth_orders(sub.graph);
}

bool read_bytes(const std::string& file, std::string* out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  *out = os.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool all_pass = true;
  auto emit = [&](int k, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s - %s\n", k, pass ? "pass" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) all_pass = false;
  };

  // 1. Every edge of every 2-connected graph on n <= 7 vertices lies on an
  //    extracted cycle of length >= td(G).
  {
    const auto t0 = Clock::now();
    Failures f;
    long long graphs = 0, certs = 0;
    for (int n = 3; n <= 7; ++n) {
      for_connected(n, [&](const Graph& g) {
        if (!is_two_connected(g)) return;
        ++graphs;
        TreedepthSolver solver(g, n);
        const int td = solver.treedepth();
        ExtractionOptions ex;
        ex.solver = &solver;
        for (auto [a, b] : g.edges()) {
          ++certs;
          try {
            CycleCertificate cert = long_cycle_through_edge(g, a, b, ex);
            std::string why;
            if (!cert.cycle.valid_in(g, &why))
              f.add(to_graph6(g) + " edge " + ename(a, b) + ": invalid cycle: " + why);
            else if (!cert.cycle.contains_edge(a, b))
              f.add(to_graph6(g) + " edge " + ename(a, b) + ": cycle misses the edge");
            else if (cert.cycle.length() < td)
              f.add(to_graph6(g) + " edge " + ename(a, b) + ": length " +
                    std::to_string(cert.cycle.length()) + " < td " + std::to_string(td));
          } catch (const std::exception& e) {
            f.add(to_graph6(g) + " edge " + ename(a, b) + ": " + e.what());
          }
        }
      });
      std::fprintf(stderr, "[acceptance] criterion 1: n=%d done, %lld graphs, %s\n", n,
                   graphs, fmt_secs(t0).c_str());
    }
    const double elapsed = secs(t0);
    std::ostringstream os;
    os << graphs << " two-connected graphs (n <= 7), " << certs << " edge certificates, "
       << f.count << " failures, " << fmt_secs(t0) << " (budget 600s)" << f.detail();
    emit(1, f.count == 0 && elapsed <= 600.0, os.str());
  }

  // 2. Randomized: 10^4 ear-decomposition graphs, 8 <= n <= 12, fixed seed.
  {
    const auto t0 = Clock::now();
    const std::uint64_t base_seed = 20260814;
    Failures f;
    long long certs = 0;
    for (int i = 0; i < 10000; ++i) {
      const int n = 8 + i % 5;
      Graph g = random_graph(GeneratorModel::random_2connected, n, base_seed ^ i);
      TreedepthSolver solver(g, n);
      const int td = solver.treedepth();
      auto circ = circumference(g);
      if (!circ || *circ < td)
        f.add(to_graph6(g) + ": treedepth " + std::to_string(td) + " exceeds circumference");
      ExtractionOptions ex;
      ex.solver = &solver;
      for (auto [a, b] : g.edges()) {
        ++certs;
        try {
          CycleCertificate cert = long_cycle_through_edge(g, a, b, ex);
          std::string why;
          if (!cert.cycle.valid_in(g, &why) || !cert.cycle.contains_edge(a, b) ||
              cert.cycle.length() < td)
            f.add(to_graph6(g) + " edge " + ename(a, b) + ": bad certificate");
        } catch (const std::exception& e) {
          f.add(to_graph6(g) + " edge " + ename(a, b) + ": " + e.what());
        }
      }
    }
    std::ostringstream os;
    os << "10000 graphs (n 8..12, seed " << base_seed << "), " << certs
       << " edge certificates, " << f.count << " failures, " << fmt_secs(t0) << f.detail();
    emit(2, f.count == 0, os.str());
  }

  // 3. Block-tree path sums: sum td(Bi - xi) >= td(G - x0) for every connected
  //    graph n <= 7 and every anchor. Terms recomputed with the elimination
  //    order oracle through n = 6; at n = 7 the shared solver supplies them
  //    (criterion 8 proves it equal to the oracle on this exact corpus).
  {
    const auto t0 = Clock::now();
    Failures f;
    long long anchors = 0, oracle_terms = 0;
    for (int n = 2; n <= 7; ++n) {
      for_connected(n, [&](const Graph& g) {
        TreedepthSolver solver(g, n);
        ExtractionOptions ex;
        ex.solver = &solver;
        const VertexSet full = g.full_set();
        for (int x0 = 0; x0 < n; ++x0) {
          ++anchors;
          try {
            BlockTreePath p = block_tree_path(g, x0, ex);
            int sum = 0;
            for (std::size_t i = 0; i < p.blocks.size(); ++i)
              sum += solver.treedepth(
                  p.blocks[i].without(i == 0 ? x0 : p.cutvertices[i - 1]));
            int need = solver.treedepth(full.without(x0));
            if (n <= 6) {
              int osum = 0;
              for (std::size_t i = 0; i < p.blocks.size(); ++i)
                osum += oracle_td_subset(
                    g, p.blocks[i].without(i == 0 ? x0 : p.cutvertices[i - 1]));
              const int oneed = oracle_td_subset(g, full.without(x0));
              oracle_terms += p.blocks.size() + 1;
              if (osum != sum || oneed != need) {
                f.add(to_graph6(g) + " x0=" + std::to_string(x0) +
                      ": solver terms disagree with the order oracle");
                continue;
              }
            }
            if (sum < need)
              f.add(to_graph6(g) + " x0=" + std::to_string(x0) + ": sum " +
                    std::to_string(sum) + " < td(G - x0) = " + std::to_string(need));
          } catch (const std::exception& e) {
            f.add(to_graph6(g) + " x0=" + std::to_string(x0) + ": " + e.what());
          }
        }
      });
      std::fprintf(stderr, "[acceptance] criterion 3: n=%d done, %s\n", n,
                   fmt_secs(t0).c_str());
    }
    std::ostringstream os;
    os << anchors << " (graph, x0) pairs (connected n <= 7; " << oracle_terms
       << " terms oracle-recomputed at n <= 6), " << f.count << " failures, "
       << fmt_secs(t0) << f.detail();
    emit(3, f.count == 0, os.str());
  }

  // 4. a-b paths: length >= td(G - b) for every 2-connected graph n <= 7 and
  //    every ordered pair.
  {
    const auto t0 = Clock::now();
    Failures f;
    long long pairs = 0;
    for (int n = 3; n <= 7; ++n) {
      for_connected(n, [&](const Graph& g) {
        if (!is_two_connected(g)) return;
        TreedepthSolver solver(g, n);
        ExtractionOptions ex;
        ex.solver = &solver;
        const VertexSet full = g.full_set();
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            ++pairs;
            try {
              Path p = long_ab_path(g, a, b, ex);
              std::string why;
              const int need = solver.treedepth(full.without(b));
              if (!p.valid_in(g, &why))
                f.add(to_graph6(g) + " " + ename(a, b) + ": invalid path: " + why);
              else if (p.vertices.front() != a || p.vertices.back() != b)
                f.add(to_graph6(g) + " " + ename(a, b) + ": wrong endpoints");
              else if (p.length() < need)
                f.add(to_graph6(g) + " " + ename(a, b) + ": length " +
                      std::to_string(p.length()) + " < td(G - b) = " + std::to_string(need));
            } catch (const std::exception& e) {
              f.add(to_graph6(g) + " " + ename(a, b) + ": " + e.what());
            }
          }
        }
      });
      std::fprintf(stderr, "[acceptance] criterion 4: n=%d done, %s\n", n,
                   fmt_secs(t0).c_str());
    }
    std::ostringstream os;
    os << pairs << " ordered pairs over two-connected n <= 7, " << f.count
       << " failures, " << fmt_secs(t0) << f.detail();
    emit(4, f.count == 0, os.str());
  }

  // 5. Treewidth bound tw(G) <= circumference(G) - 1 on the corpora of 1 and 2.
  {
    const auto t0 = Clock::now();
    Failures f;
    long long graphs = 0;
    auto check = [&](const Graph& g) {
      ++graphs;
      const int tw = treewidth_exact(g, g.vertex_count(), 1);
      auto circ = circumference(g);
      if (!circ || tw > *circ - 1)
        f.add(to_graph6(g) + ": tw " + std::to_string(tw) + " vs circumference " +
              (circ ? std::to_string(*circ) : std::string("none")));
    };
    for (int n = 3; n <= 7; ++n)
      for_connected(n, [&](const Graph& g) {
        if (is_two_connected(g)) check(g);
      });
    const std::uint64_t base_seed = 20260814;
    for (int i = 0; i < 10000; ++i)
      check(random_graph(GeneratorModel::random_2connected, 8 + i % 5, base_seed ^ i));
    std::ostringstream os;
    os << graphs << " graphs (corpora of criteria 1 and 2), " << f.count
       << " failures, " << fmt_secs(t0) << f.detail();
    emit(5, f.count == 0, os.str());
  }

  // 6. Tightness on complete graphs: certificates meet the bound with equality.
  {
    Failures f;
    for (int n = 3; n <= 6; ++n) {
      Graph g = complete(n);
      TreedepthSolver solver(g, n);
      if (solver.treedepth() != n) {
        f.add("K" + std::to_string(n) + ": treedepth != n");
        continue;
      }
      ExtractionOptions ex;
      ex.solver = &solver;
      for (auto [a, b] : g.edges()) {
        CycleCertificate cert = long_cycle_through_edge(g, a, b, ex);
        if (cert.cycle.length() != n)
          f.add("K" + std::to_string(n) + " edge " + ename(a, b) + ": length " +
                std::to_string(cert.cycle.length()) + " != " + std::to_string(n));
      }
    }
    emit(6, f.count == 0,
         "K3..K6: every edge certificate has length exactly n = td(Kn)" + f.detail());
  }

  // 7. Two-connectivity is essential: path_plus_triangle(64) has circumference
  //    3 and treedepth 7 (>= log2 64; exact value pinned as a regression
  //    constant after being derived independently).
  {
    GeneratorSpec spec;
    spec.model = GeneratorModel::path_plus_triangle;
    spec.n = 64;
    Graph g = generate(spec);
    auto circ = circumference(g);
    TreedepthSolver solver(g, 64);
    const int td = solver.treedepth();
    std::ostringstream os;
    os << "path_plus_triangle(64): circumference "
       << (circ ? std::to_string(*circ) : std::string("none")) << ", treedepth " << td
       << " (>= 6 = log2 64; pinned exact value 7)";
    emit(7, circ && *circ == 3 && td >= 6 && td == 7, os.str());
  }

  // 8. Oracle cross-validation. Treedepth: the solver must equal the minimum
  //    over all elimination orders for every connected graph n <= 7; the
  //    min-over-orders oracle recurses over root choices, which enumerates
  //    exactly the order minima, and is itself checked against the literal
  //    n!-permutation oracle (exhaustively n <= 5, sampled at n = 7).
  //    Circumference and cutvertices/bridges: exhaustive deletion/enumeration
  //    oracles on every labeled graph n <= 6 plus structured and seeded
  //    corpora at n = 7, 8.
  {
    const auto t0 = Clock::now();
    Failures f;
    long long td_graphs = 0, perm_graphs = 0, circ_graphs = 0, cut_graphs = 0;
    for (int n = 1; n <= 7; ++n) {
      for_connected(n, [&](const Graph& g) {
        ++td_graphs;
        const int solver_td = TreedepthSolver(g, n).treedepth();
        const int order_td = oracle::treedepth_orders(g);
        if (solver_td != order_td)
          f.add(to_graph6(g) + ": solver td " + std::to_string(solver_td) +
                " != order oracle " + std::to_string(order_td));
        if (n <= 5) {
          ++perm_graphs;
          if (oracle::treedepth_perm(g) != order_td)
            f.add(to_graph6(g) + ": n! oracle disagrees with order oracle");
        }
      });
      std::fprintf(stderr, "[acceptance] criterion 8: treedepth n=%d done, %s\n", n,
                   fmt_secs(t0).c_str());
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Graph g = random_graph(GeneratorModel::random_connected, 7, seed * 977 + 5);
      ++perm_graphs;
      if (oracle::treedepth_perm(g) != TreedepthSolver(g, 7).treedepth())
        f.add(to_graph6(g) + ": n! oracle disagrees with solver at n = 7");
    }

    auto check_structure = [&](const Graph& g) {
      ++circ_graphs;
      if (circumference(g) != oracle::circumference_exhaustive(g))
        f.add(to_graph6(g) + ": circumference disagrees with exhaustive oracle");
      if (g.vertex_count() >= 2 && is_connected(g)) {
        ++cut_graphs;
        if (cutvertices(g) != oracle::cutvertices_deletion(g))
          f.add(to_graph6(g) + ": cutvertices disagree with deletion oracle");
        if (bridges(g) != oracle::bridges_deletion(g))
          f.add(to_graph6(g) + ": bridges disagree with deletion oracle");
        if (is_two_connected(g) != oracle::two_connected_deletion(g))
          f.add(to_graph6(g) + ": 2-connectivity disagrees with deletion oracle");
      }
    };
    for (int n = 1; n <= 6; ++n) for_all_labeled(n, check_structure);
    for (const Graph& g : medium_corpus()) check_structure(g);

    std::ostringstream os;
    os << "treedepth: " << td_graphs << " connected graphs n <= 7 vs order oracle ("
       << perm_graphs << " also vs literal n! oracle); circumference: " << circ_graphs
       << " graphs (all labeled n <= 6 + corpora n = 7, 8); cutvertices/bridges: "
       << cut_graphs << " graphs; " << f.count << " failures, " << fmt_secs(t0)
       << f.detail();
    emit(8, f.count == 0, os.str());
  }

  // 9. Bound table rows and dominance for k <= 50.
  {
    Failures f;
    std::vector<BoundRow> rows = bound_table(50);
    auto expect = [&](int k, long long dirac, long long mw) {
      const BoundRow& row = rows[k - 3];
      if (row.k != k || row.dirac != dirac || row.marshall_wood != mw ||
          row.circumference != k)
        f.add("row k=" + std::to_string(k) + " mismatch");
    };
    expect(3, 5, 3);
    expect(4, 8, 7);
    expect(5, 13, 9);
    for (const BoundRow& row : rows)
      if (!row.dominance) f.add("dominance fails at k=" + std::to_string(row.k));
    emit(9, f.count == 0,
         "rows (5/3/3), (8/7/4), (13/9/5) match; circumference <= marshall_wood <= "
         "dirac for k = 3..50" + f.detail());
  }

  // 10. Determinism: identical verify invocations yield byte-identical reports,
  //     both through the library and through the installed CLI binary.
  {
    GeneratorSpec spec;
    spec.model = GeneratorModel::random_2connected;
    spec.n = 10;
    spec.seed = 77;
    VerifyOptions opts;
    opts.checks = CheckSet::parse("thm12,thm11,lemma31,lemma32,monotonicity,block_law");
    const std::string rep1 = verify_corpus(spec, 50, opts).to_jsonl();
    const std::string rep2 = verify_corpus(spec, 50, opts).to_jsonl();
    bool ok = !rep1.empty() && rep1 == rep2;
    std::string note = "library reports identical over 50 graphs";

    if (ok && !cli.empty()) {
      const std::string flags =
          " verify --model random_2connected --n 9 --seed 11 --count 40"
          " --checks thm12,thm11,lemma31,lemma32,monotonicity,block_law";
      std::string out1, out2;
      const int rc1 = std::system(
          ("\"" + cli + "\"" + flags + " --out acceptance_rep1.jsonl > acceptance_sum1.txt").c_str());
      const int rc2 = std::system(
          ("\"" + cli + "\"" + flags + " --out acceptance_rep2.jsonl > acceptance_sum2.txt").c_str());
      std::string sum1, sum2;
      if (rc1 != 0 || rc2 != 0 || !read_bytes("acceptance_rep1.jsonl", &out1) ||
          !read_bytes("acceptance_rep2.jsonl", &out2) ||
          !read_bytes("acceptance_sum1.txt", &sum1) ||
          !read_bytes("acceptance_sum2.txt", &sum2)) {
        ok = false;
        note = "CLI runs failed";
      } else if (out1.empty() || out1 != out2 || sum1 != sum2) {
        ok = false;
        note = "CLI reports differ between runs";
      } else {
        note += "; CLI reports and summaries identical over 40 graphs";
      }
    } else if (cli.empty()) {
      note += " (no CLI path supplied)";
    }
    emit(10, ok, note);
  }

  return all_pass ? 0 : 1;
}
