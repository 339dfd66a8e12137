#ifndef RICCI_CLASSIFY_HPP
#define RICCI_CLASSIFY_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ricci/canonical.hpp"
#include "ricci/graph.hpp"

namespace ricci {

struct FlatEntry {
  CanonicalForm canon;
  int n = 0;
  std::string name;    // petersen | triplex | dodecahedron | UNKNOWN
  std::string graph6;  // as streamed in
};

struct SkipRecord {
  long index = 0;  // 0-based position in the input stream
  std::string reason;
};

struct PerN {
  long inspected = 0;
  long flat = 0;  // distinct flat classes
};

struct ClassificationResult {
  long inspected = 0;
  std::vector<FlatEntry> flat;  // unique per canonical form, ordered by (n, form)
  std::vector<std::pair<std::string, std::pair<int, int>>> lemma_violations;  // (graph6, edge)
  std::map<int, PerN> per_n;
  std::vector<SkipRecord> skipped;
};

namespace detail {

// Pure per-graph verdict; the expensive part of classification, safe to
// compute on worker threads.
struct GraphAssessment {
  bool skipped = false;
  std::string skip_reason;
  int n = 0;
  bool flat = false;
  CanonicalForm canon;
  std::string graph6;
  std::vector<std::pair<int, int>> lemma_violations;
};

GraphAssessment assess_graph(const Graph& g);

}  // namespace detail

// Streams graphs through the full curvature report, collecting Ricci-flat
// classes (identified against the three named fixtures), re-verifying every
// flat graph with the general flow-based W1 solver, and checking on each
// cubic girth>=5 graph that its zero-curvature edges meet the two-pentagon
// condition. Per-graph domain errors become skip records; the stream never
// aborts.
class Classifier {
 public:
  Classifier();
  void add(const Graph& g) { merge(detail::assess_graph(g)); }
  void merge(const detail::GraphAssessment& a);
  ClassificationResult finish();

 private:
  long next_index_ = 0;
  ClassificationResult result_;
  std::map<CanonicalForm, FlatEntry> flat_;
  std::map<std::string, std::string> fixture_names_;  // canonical graph6 -> name
};

// jobs > 1 fans the per-graph assessments out across worker threads;
// results merge in input order, so output is identical for any job count.
ClassificationResult classify(const std::vector<Graph>& graphs, int jobs = 1);

// Every edge with kappa == 0 that fails the two-pentagon condition.
// Requires a connected cubic graph of girth >= 5.
std::vector<std::pair<int, int>> verify_lemma(const Graph& g);

// Backtracking completion search seeded with the double-pentagon
// configuration (two 5-cycles sharing exactly one edge). Grows by edge
// additions and new vertices under girth >= 5, prunes states whose
// saturated edges can no longer lie on two such pentagons, and returns
// every completed 3-regular graph on <= max_n vertices whose edges all
// satisfy the two-pentagon condition, one canonical representative per
// class ordered by (n, canonical form).
std::vector<Graph> search_two_pentagon_completions(
    int max_n, long long node_budget = 4'000'000'000LL,
    const std::function<void(long long)>& progress = {});

std::string classification_json(const ClassificationResult& r);
std::string classification_table(const ClassificationResult& r);

}  // namespace ricci

#endif
