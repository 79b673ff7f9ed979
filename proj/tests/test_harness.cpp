#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "cycledepth/block_tree.hpp"
#include "cycledepth/cycles.hpp"
#include "cycledepth/errors.hpp"
#include "cycledepth/harness.hpp"
#include "cycledepth/io.hpp"
#include "cycledepth/treedepth.hpp"

using namespace cycledepth;

namespace {

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

GeneratorSpec make_spec(GeneratorModel m, int n, std::uint64_t seed = 0) {
  GeneratorSpec s;
  s.model = m;
  s.n = n;
  s.seed = seed;
  return s;
}

CheckSet all_checks() { return CheckSet::parse("thm12,thm11,lemma31,lemma32,monotonicity,block_law"); }

}  // namespace

TEST_CASE("generate: deterministic models") {
  CHECK(to_graph6(generate(make_spec(GeneratorModel::complete, 5))) == to_graph6(complete(5)));
  CHECK(generate(make_spec(GeneratorModel::complete, 1)).vertex_count() == 1);

  Graph c5 = generate(make_spec(GeneratorModel::cycle, 5));
  CHECK(to_graph6(c5) == to_graph6(ring(5)));
  CHECK(circumference(c5).value() == 5);

  // n = 3 is the triangle itself; larger n keep circumference pinned at 3.
  Graph t3 = generate(make_spec(GeneratorModel::path_plus_triangle, 3));
  CHECK(to_graph6(t3) == to_graph6(complete(3)));
  for (int n : {3, 4, 8, 20}) {
    Graph g = generate(make_spec(GeneratorModel::path_plus_triangle, n));
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == n);  // n - 1 path edges plus the 0-2 chord
    CHECK(g.has_edge(0, 2));
    CHECK(is_connected(g));
    CHECK(circumference(g).value() == 3);
  }
}

TEST_CASE("generate: identical specs give identical graphs") {
  for (auto model : {GeneratorModel::random_connected, GeneratorModel::random_2connected}) {
    GeneratorSpec spec = make_spec(model, 12, 42);
    CHECK(to_graph6(generate(spec)) == to_graph6(generate(spec)));
  }
  GeneratorSpec spec = make_spec(GeneratorModel::random_2connected, 9, 100);
  auto run = [&] {
    std::vector<std::string> g6;
    for_each_graph(spec, 6, [&](const Graph& g, std::uint64_t) { g6.push_back(to_graph6(g)); });
    return g6;
  };
  std::vector<std::string> first = run();
  CHECK(first.size() == 6);
  CHECK(first == run());
  CHECK(std::set<std::string>(first.begin(), first.end()).size() > 1);  // seeds differ per index
}

TEST_CASE("generate: random_connected stays connected, density extremes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate(make_spec(GeneratorModel::random_connected, 10, seed));
    CHECK(g.vertex_count() == 10);
    CHECK(is_connected(g));
  }
  GeneratorSpec tree = make_spec(GeneratorModel::random_connected, 8, 3);
  tree.edge_density = 0.0;
  CHECK(generate(tree).edge_count() == 7);
  GeneratorSpec dense = tree;
  dense.edge_density = 1.0;
  CHECK(generate(dense).edge_count() == 28);
  GeneratorSpec bad = tree;
  bad.edge_density = 1.5;
  CHECK_THROWS_AS(generate(bad), precondition_error);
  bad.edge_density = -0.1;
  CHECK_THROWS_AS(generate(bad), precondition_error);
}

TEST_CASE("generate: random_2connected is 2-connected") {
  for (int n : {3, 4, 5, 7, 9, 14}) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      Graph g = generate(make_spec(GeneratorModel::random_2connected, n, seed));
      CHECK(g.vertex_count() == n);
      CHECK(is_two_connected(g));
    }
  }
  GeneratorSpec sparse = make_spec(GeneratorModel::random_2connected, 11, 5);
  sparse.edge_density = 0.0;
  Graph g = generate(sparse);
  CHECK(is_two_connected(g));
  CHECK(g.edge_count() >= g.vertex_count());  // cycle plus ears
}

TEST_CASE("generate: preconditions") {
  CHECK_THROWS_AS(generate(make_spec(GeneratorModel::complete, 0)), precondition_error);
  CHECK_THROWS_AS(generate(make_spec(GeneratorModel::cycle, 2)), precondition_error);
  CHECK_THROWS_AS(generate(make_spec(GeneratorModel::path_plus_triangle, 2)), precondition_error);
  CHECK_THROWS_AS(generate(make_spec(GeneratorModel::random_2connected, 2)), precondition_error);
  CHECK_THROWS_AS(generate(make_spec(GeneratorModel::random_connected, 0)), precondition_error);
  CHECK_THROWS_AS(generate(make_spec(GeneratorModel::enumerate_all, 4)), precondition_error);

  auto sink = [](const Graph&, std::uint64_t) {};
  CHECK_THROWS_AS(for_each_graph(make_spec(GeneratorModel::enumerate_all, 0), 0, sink),
                  precondition_error);
  CHECK_THROWS_AS(for_each_graph(make_spec(GeneratorModel::enumerate_all, 8), 0, sink),
                  size_limit_error);
}

TEST_CASE("generator model names round trip") {
  for (auto m : {GeneratorModel::complete, GeneratorModel::cycle,
                 GeneratorModel::path_plus_triangle, GeneratorModel::random_2connected,
                 GeneratorModel::random_connected, GeneratorModel::enumerate_all})
    CHECK(parse_generator_model(to_string(m)) == m);
  CHECK_THROWS_AS(parse_generator_model("bogus"), parse_error);
}

TEST_CASE("enumerate_all: labeled connected counts") {
  auto count_n = [](int n) {
    std::uint64_t count = 0;
    std::uint64_t next_index = 0;
    for_each_graph(make_spec(GeneratorModel::enumerate_all, n), 0,
                   [&](const Graph& g, std::uint64_t index) {
                     CHECK(g.vertex_count() == n);
                     CHECK(is_connected(g));
                     CHECK(index == next_index++);
                     ++count;
                   });
    return count;
  };
  CHECK(count_n(1) == 1);
  CHECK(count_n(2) == 1);
  CHECK(count_n(3) == 4);
  CHECK(count_n(4) == 38);
  CHECK(count_n(5) == 728);

  std::set<std::string> seen;
  for_each_graph(make_spec(GeneratorModel::enumerate_all, 4), 0,
                 [&](const Graph& g, std::uint64_t) { seen.insert(to_graph6(g)); });
  CHECK(seen.size() == 38);  // labeled graphs are pairwise distinct
}

TEST_CASE("deterministic models stream exactly one graph") {
  for (auto m : {GeneratorModel::complete, GeneratorModel::cycle,
                 GeneratorModel::path_plus_triangle}) {
    int calls = 0;
    for_each_graph(make_spec(m, 5), 99, [&](const Graph&, std::uint64_t index) {
      CHECK(index == 0);
      ++calls;
    });
    CHECK(calls == 1);
  }
}

TEST_CASE("CheckSet: parse and canonical form") {
  CheckSet one = CheckSet::parse("thm12");
  CHECK(one.thm12);
  CHECK_FALSE(one.thm11);
  CHECK(one.any());
  CHECK_FALSE(one.needs_treewidth());
  CHECK(one.to_string() == "thm12");

  CheckSet spaced = CheckSet::parse("  block_law ,thm11,  lemma32");
  CHECK(spaced.block_law);
  CHECK(spaced.thm11);
  CHECK(spaced.lemma32);
  CHECK(spaced.needs_treewidth());
  CHECK(spaced.to_string() == "thm11,lemma32,block_law");  // canonical order

  CHECK(CheckSet::parse("monotonicity,monotonicity").to_string() == "monotonicity");
  CHECK(CheckSet::parse("lemma31,,thm12").to_string() == "thm12,lemma31");
  CHECK_FALSE(CheckSet::parse("").any());

  CheckSet everything = all_checks();
  CHECK(everything.to_string() == "thm12,thm11,lemma31,lemma32,monotonicity,block_law");
  CHECK(CheckSet::parse(everything.to_string()).to_string() == everything.to_string());

  try {
    CheckSet::parse("thm12,bogus");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 6);
  }
}

TEST_CASE("verify: K3 passes every check, jsonl golden line") {
  VerifyOptions opts;
  opts.checks = all_checks();
  VerificationReport rep = verify_corpus({complete(3)}, opts);

  REQUIRE(rep.records.size() == 1);
  const GraphRecord& r = rep.records[0];
  CHECK(r.treedepth.value() == 3);
  CHECK(r.treewidth.value() == 2);
  CHECK(r.circumference.value() == 3);
  CHECK(r.min_certificate_cycle.value() == 3);
  CHECK(r.slack.value() == 0);
  CHECK(r.failures.empty());
  CHECK(rep.ok());
  CHECK(rep.graphs == 1);
  CHECK(rep.checked == 1);
  CHECK(rep.skipped == 0);
  CHECK(rep.not_applicable == 0);

  CHECK(rep.to_jsonl() ==
        "{\"index\":0,\"graph6\":\"Bw\",\"n\":3,\"edges\":3,\"connected\":true,"
        "\"two_connected\":true,\"treedepth\":3,\"treewidth\":2,\"circumference\":3,"
        "\"min_certificate_cycle\":3,\"slack\":0,\"skipped\":false,\"failures\":[]}\n");
  CHECK(rep.summary() ==
        "checks: thm12,thm11,lemma31,lemma32,monotonicity,block_law\n"
        "graphs 1, checked 1, skipped 0, not applicable 0, failures 0\n");
}

TEST_CASE("verify: empty corpus") {
  VerifyOptions opts;
  opts.checks = CheckSet::parse("thm12");
  VerificationReport rep = verify_corpus(std::vector<Graph>{}, opts);
  CHECK(rep.ok());
  CHECK(rep.graphs == 0);
  CHECK(rep.to_jsonl().empty());
  CHECK(rep.summary() ==
        "checks: thm12\ngraphs 0, checked 0, skipped 0, not applicable 0, failures 0\n");

  VerifyOptions none;
  CHECK(verify_corpus(std::vector<Graph>{}, none).summary() ==
        "checks: (none)\ngraphs 0, checked 0, skipped 0, not applicable 0, failures 0\n");
}

TEST_CASE("verify: solver limits turn into skip records") {
  VerifyOptions opts;
  opts.checks = CheckSet::parse("monotonicity");
  opts.treedepth_limit = 2;
  VerificationReport rep = verify_corpus({complete(3)}, opts);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].skipped);
  CHECK(rep.records[0].skip_reason == "treedepth solver limit 2 below n = 3");
  CHECK_FALSE(rep.records[0].treedepth.has_value());
  CHECK(rep.graphs == 1);
  CHECK(rep.checked == 0);
  CHECK(rep.skipped == 1);
  CHECK(rep.ok());  // skipped is not a failure
  CHECK(rep.to_jsonl() ==
        "{\"index\":0,\"graph6\":\"Bw\",\"n\":3,\"edges\":3,\"connected\":true,"
        "\"two_connected\":true,\"treedepth\":null,\"treewidth\":null,\"circumference\":null,"
        "\"min_certificate_cycle\":null,\"slack\":null,\"skipped\":true,"
        "\"skip_reason\":\"treedepth solver limit 2 below n = 3\",\"failures\":[]}\n");

  // The treewidth gate only matters when a selected check needs treewidth.
  VerifyOptions tw_opts;
  tw_opts.checks = CheckSet::parse("thm11");
  tw_opts.treewidth_limit = 3;
  VerificationReport tw_rep = verify_corpus({complete(4)}, tw_opts);
  CHECK(tw_rep.records[0].skipped);
  CHECK(tw_rep.records[0].skip_reason == "treewidth solver limit 3 below n = 4");
  VerifyOptions no_tw = tw_opts;
  no_tw.checks = CheckSet::parse("monotonicity");
  CHECK_FALSE(verify_corpus({complete(4)}, no_tw).records[0].skipped);
}

TEST_CASE("verify: inapplicable checks are counted, not failed") {
  VerifyOptions opts;
  opts.checks = CheckSet::parse("thm12");
  VerificationReport rep = verify_corpus({path(4)}, opts);  // not 2-connected
  CHECK(rep.ok());
  CHECK(rep.checked == 0);
  CHECK(rep.not_applicable == 1);
  CHECK_FALSE(rep.records[0].min_certificate_cycle.has_value());

  // A graph can hit both buckets when one selected check applies and another does not.
  opts.checks = CheckSet::parse("thm12,monotonicity");
  VerificationReport both = verify_corpus({path(4)}, opts);
  CHECK(both.checked == 1);
  CHECK(both.not_applicable == 1);
}

TEST_CASE("verify: path_plus_triangle n=64 separates treedepth from circumference") {
  VerifyOptions opts;
  opts.checks = CheckSet::parse("monotonicity");
  VerificationReport rep =
      verify_corpus(make_spec(GeneratorModel::path_plus_triangle, 64), 1, opts);
  REQUIRE(rep.records.size() == 1);
  const GraphRecord& r = rep.records[0];
  CHECK(rep.ok());
  CHECK(r.connected);
  CHECK_FALSE(r.two_connected);
  CHECK(r.treedepth.value() == 7);  // >= log2(64) + 1; pinned exactly
  CHECK(r.circumference.value() == 3);
  CHECK(r.slack.value() == -4);
  CHECK_FALSE(r.treewidth.has_value());
}

TEST_CASE("verify: spec streaming matches a materialized corpus") {
  GeneratorSpec spec = make_spec(GeneratorModel::random_2connected, 8, 5);
  VerifyOptions opts;
  opts.checks = CheckSet::parse("thm12,lemma31");

  std::vector<Graph> corpus;
  for_each_graph(spec, 12, [&](const Graph& g, std::uint64_t) { corpus.push_back(g); });
  VerificationReport streamed = verify_corpus(spec, 12, opts);
  VerificationReport materialized = verify_corpus(corpus, opts);
  CHECK(streamed.to_jsonl() == materialized.to_jsonl());
  CHECK(streamed.summary() == materialized.summary());
  CHECK(streamed.ok());
  CHECK(streamed.checked == 12);
}

TEST_CASE("verify: reports are byte-identical across runs and thread counts") {
  GeneratorSpec spec = make_spec(GeneratorModel::random_2connected, 9, 2026);
  VerifyOptions opts;
  opts.checks = all_checks();
  std::string first = verify_corpus(spec, 10, opts).to_jsonl();
  CHECK(first == verify_corpus(spec, 10, opts).to_jsonl());

  VerifyOptions threaded = opts;
  threaded.threads = 4;
  CHECK(first == verify_corpus(spec, 10, threaded).to_jsonl());
}

TEST_CASE("verify: chunked parallel streaming keeps record order") {
  // More graphs than one dispatch chunk, so the flush boundary is exercised.
  GeneratorSpec spec = make_spec(GeneratorModel::random_connected, 5, 7);
  VerifyOptions opts;
  opts.checks = CheckSet::parse("monotonicity");
  VerificationReport serial = verify_corpus(spec, 4500, opts);
  VerifyOptions par = opts;
  par.threads = 2;
  VerificationReport parallel = verify_corpus(spec, 4500, par);
  CHECK(serial.records.size() == 4500);
  CHECK(serial.to_jsonl() == parallel.to_jsonl());
  CHECK(serial.ok());
}

TEST_CASE("verify: every check passes on all connected graphs of order 4") {
  VerifyOptions opts;
  opts.checks = all_checks();
  VerificationReport rep = verify_corpus(make_spec(GeneratorModel::enumerate_all, 4), 0, opts);
  CHECK(rep.graphs == 38);
  CHECK(rep.checked == 38);
  CHECK(rep.skipped == 0);
  CHECK(rep.ok());
}

TEST_CASE("verify: cycle corpus pins certificate length") {
  VerifyOptions opts;
  opts.checks = CheckSet::parse("thm12");
  VerificationReport rep = verify_corpus({ring(5)}, opts);
  const GraphRecord& r = rep.records[0];
  CHECK(r.treedepth.value() == 4);
  CHECK(r.circumference.value() == 5);
  CHECK(r.min_certificate_cycle.value() == 5);  // the only cycle is the full ring
  CHECK(r.slack.value() == 1);
  CHECK(rep.ok());
}

TEST_CASE("bound_table: golden rows and dominance") {
  std::vector<BoundRow> rows = bound_table(50);
  REQUIRE(rows.size() == 48);
  CHECK(rows[0].k == 3);
  CHECK(rows[0].dirac == 5);
  CHECK(rows[0].marshall_wood == 3);
  CHECK(rows[0].circumference == 3);
  CHECK(rows[1].dirac == 8);
  CHECK(rows[1].marshall_wood == 7);
  CHECK(rows[1].circumference == 4);
  CHECK(rows[2].dirac == 13);
  CHECK(rows[2].marshall_wood == 9);
  CHECK(rows[2].circumference == 5);
  for (const BoundRow& row : rows) {
    CHECK(row.dominance);
    CHECK(row.circumference <= row.marshall_wood);
    CHECK(row.marshall_wood <= row.dirac);
  }
  CHECK_THROWS_AS(bound_table(2), precondition_error);
}

TEST_CASE("tightness_scan: complete graphs are tight, cycles are not") {
  std::vector<TightGraph> small = tightness_scan(3);
  REQUIRE(small.size() == 1);
  CHECK(small[0].graph6 == to_graph6(complete(3)));
  CHECK(small[0].treedepth == 3);
  CHECK(small[0].circumference == 3);

  std::vector<TightGraph> scan = tightness_scan(5);
  std::set<std::string> g6;
  int last_n = 3;
  for (const TightGraph& t : scan) {
    g6.insert(t.graph6);
    CHECK(t.treedepth == t.circumference);
    CHECK(t.n >= last_n);  // emitted in order of increasing n
    last_n = t.n;
    Graph g = parse_graph6(t.graph6);
    CHECK(is_two_connected(g));
    CHECK(treedepth_exact(g).value == t.treedepth);
    CHECK(circumference(g).value() == t.circumference);
  }
  for (int n : {3, 4, 5}) CHECK(g6.count(to_graph6(complete(n))) == 1);
  CHECK(g6.count(to_graph6(ring(5))) == 0);  // td(C5) = 4 < 5

  CHECK_THROWS_AS(tightness_scan(2), precondition_error);
  CHECK_THROWS_AS(tightness_scan(kEnumerationLimit + 1), size_limit_error);
}
