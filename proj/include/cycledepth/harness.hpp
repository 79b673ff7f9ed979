#ifndef CYCLEDEPTH_HARNESS_HPP
#define CYCLEDEPTH_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycledepth/cycles.hpp"
#include "cycledepth/graph.hpp"
#include "cycledepth/treedepth.hpp"
#include "cycledepth/treewidth.hpp"

namespace cycledepth {

inline constexpr int kEnumerationLimit = 7;  // labeled connected enumeration

enum class GeneratorModel {
  complete,
  cycle,
  path_plus_triangle,
  random_2connected,
  random_connected,
  enumerate_all,
};

GeneratorModel parse_generator_model(const std::string& name);
std::string to_string(GeneratorModel m);

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::complete;
  int n = 0;
  std::uint64_t seed = 0;
  std::optional<double> edge_density;  // extra-edge probability, random models
};

// One graph, bit-for-bit reproducible from the spec. enumerate_all denotes a
// stream, not a single graph, and is rejected here.
Graph generate(const GeneratorSpec& spec);

// Streams the corpus a spec denotes: one graph for the deterministic models,
// `count` graphs for the random models (task seed = seed xor index), every
// connected labeled graph of order n for enumerate_all (count ignored).
void for_each_graph(const GeneratorSpec& spec, int count,
                    const std::function<void(const Graph&, std::uint64_t)>& f);

struct CheckSet {
  bool thm12 = false;         // every edge on a cycle of length >= td(G)
  bool thm11 = false;         // tw(G) <= circumference(G) - 1
  bool lemma31 = false;       // block-tree path sums
  bool lemma32 = false;       // a-b paths of length >= td(G - b)
  bool monotonicity = false;  // td(G) <= td(G - x) + 1
  bool block_law = false;     // tw(G) = max over blocks tw(B)

  static CheckSet parse(const std::string& csv);  // unknown name -> parse error
  std::string to_string() const;                  // canonical comma list
  bool any() const;
  bool needs_treewidth() const { return thm11 || block_law; }
};

struct GraphRecord {
  std::uint64_t index = 0;
  std::string graph6;
  int n = 0;
  int edges = 0;
  bool connected = false;
  bool two_connected = false;
  std::optional<int> treedepth;
  std::optional<int> treewidth;              // only when a check wants it
  std::optional<int> circumference;          // absent: acyclic
  std::optional<int> min_certificate_cycle;  // thm12: min cycle length over edges
  std::optional<int> slack;                  // circumference - treedepth
  bool skipped = false;
  std::string skip_reason;
  std::vector<std::string> failures;  // "check: detail"
};

struct VerificationReport {
  CheckSet checks;
  std::vector<GraphRecord> records;
  std::uint64_t graphs = 0;
  std::uint64_t checked = 0;         // graphs where >= 1 selected check ran
  std::uint64_t skipped = 0;         // oversized for a required solver
  std::uint64_t not_applicable = 0;  // graphs where a selected check didn't apply
  std::vector<std::string> failure_graph6;

  bool ok() const { return failure_graph6.empty(); }
  std::string to_jsonl() const;  // one JSON object per graph, index order
  std::string summary() const;   // human-readable totals
};

struct VerifyOptions {
  CheckSet checks;
  // Verification wants oracles at any feasible size, so the treedepth gate
  // defaults to the hard cap rather than the one-shot solver default.
  int treedepth_limit = kTreedepthHardLimit;
  int treewidth_limit = kDefaultTreewidthLimit;
  CycleOptions cycle_options;
  int threads = 1;  // per-graph tasks in parallel; report order is fixed
};

VerificationReport verify_corpus(const std::vector<Graph>& graphs,
                                 const VerifyOptions& opts);
VerificationReport verify_corpus(const GeneratorSpec& spec, int count,
                                 const VerifyOptions& opts);

struct BoundRow {
  int k;                      // circumference
  long long dirac;            // ceil(k^2 / 2)
  long long marshall_wood;    // floor(k/2) * (k-1) + 1
  long long circumference;    // k itself: td <= circumference
  bool dominance;             // circumference <= marshall_wood <= dirac
};

// Treedepth upper bounds for graphs of circumference k, k = 3..k_max.
std::vector<BoundRow> bound_table(int k_max);

struct TightGraph {
  std::string graph6;
  int n = 0;
  int treedepth = 0;
  int circumference = 0;
};

// All 2-connected labeled graphs on 3..n_max vertices with td == circ;
// contains every complete graph. n_max capped by the enumeration limit.
std::vector<TightGraph> tightness_scan(int n_max);

}  // namespace cycledepth

#endif
