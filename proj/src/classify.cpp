#include "ricci/classify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ricci/curvature.hpp"
#include "ricci/error.hpp"
#include "ricci/generate.hpp"
#include "ricci/graph6.hpp"
#include "ricci/measure.hpp"
#include "ricci/named.hpp"
#include "ricci/transport.hpp"

#include "json.hpp"

namespace ricci {

namespace {

// Cross-check a flat verdict through the generic min-cost-flow W1 instead
// of the assignment shortcut. A mismatch is a solver bug, not bad input.
void reverify_flat(const Graph& g, int d) {
  Rational p(1, d + 1);
  for (auto [u, v] : g.edges) {
    Rational w = w1(g, mu(g, u, p), mu(g, v, p)).distance;
    Rational k = Rational(d + 1, d) * (Rational(1) - w);
    if (!k.is_zero())
      throw std::logic_error("flat re-verification failed on edge (" + std::to_string(u) +
                             "," + std::to_string(v) + "): kappa=" + k.str());
  }
}

}  // namespace

namespace detail {

GraphAssessment assess_graph(const Graph& g) {
  GraphAssessment a;
  a.n = g.n;
  a.graph6 = emit_graph6(g);
  try {
    auto report = curvature_report(g);
    auto profile = degree_profile(g);
    if (profile.regular == 3) {
      auto gi = girth(g);
      if (gi && *gi >= 5) {
        for (const auto& e : report.edges) {
          if (e.kappa.is_zero() && !two_pentagon_condition(g, e.u, e.v))
            a.lemma_violations.emplace_back(e.u, e.v);
        }
      }
    }
    if (report.all_flat) {
      reverify_flat(g, *profile.regular);
      a.flat = true;
      a.canon = canonical_form(g);
    }
  } catch (const Error& e) {
    a.skipped = true;
    a.skip_reason = e.what();
  }
  return a;
}

}  // namespace detail

Classifier::Classifier() {
  fixture_names_[canonical_form(petersen_graph()).bytes] = "petersen";
  fixture_names_[canonical_form(triplex_graph()).bytes] = "triplex";
  fixture_names_[canonical_form(dodecahedral_graph()).bytes] = "dodecahedron";
}

void Classifier::merge(const detail::GraphAssessment& a) {
  long index = next_index_++;
  if (a.skipped) {
    result_.skipped.push_back({index, a.skip_reason});
    return;
  }
  ++result_.inspected;
  ++result_.per_n[a.n].inspected;
  for (auto [u, v] : a.lemma_violations)
    result_.lemma_violations.emplace_back(a.graph6, std::make_pair(u, v));
  if (a.flat && !flat_.count(a.canon)) {
    auto it = fixture_names_.find(a.canon.bytes);
    flat_.emplace(a.canon, FlatEntry{a.canon, a.n,
                                     it == fixture_names_.end() ? "UNKNOWN" : it->second,
                                     a.graph6});
    ++result_.per_n[a.n].flat;
  }
}

ClassificationResult Classifier::finish() {
  ClassificationResult out = std::move(result_);
  for (auto& [canon, entry] : flat_) out.flat.push_back(entry);
  std::sort(out.flat.begin(), out.flat.end(), [](const FlatEntry& a, const FlatEntry& b) {
    return std::tie(a.n, a.canon.bytes) < std::tie(b.n, b.canon.bytes);
  });
  result_ = {};
  flat_.clear();
  next_index_ = 0;
  return out;
}

ClassificationResult classify(const std::vector<Graph>& graphs, int jobs) {
  Classifier collector;
  if (jobs <= 1 || graphs.size() < 2) {
    for (const auto& g : graphs) collector.add(g);
    return collector.finish();
  }
  std::vector<detail::GraphAssessment> done(graphs.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= graphs.size()) return;
      done[i] = detail::assess_graph(graphs[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& a : done) collector.merge(a);
  return collector.finish();
}

std::vector<std::pair<int, int>> verify_lemma(const Graph& g) {
  if (!is_connected(g)) fail(Errc::disconnected_graph, "lemma check needs a connected graph");
  auto profile = degree_profile(g);
  if (profile.regular != 3)
    fail(Errc::not_cubic, "degrees range " + std::to_string(profile.min_degree) + ".." +
                              std::to_string(profile.max_degree));
  auto gi = girth(g);
  if (!gi || *gi < 5)
    fail(Errc::girth_too_small, "girth " + (gi ? std::to_string(*gi) : "none") + " < 5");
  std::vector<std::pair<int, int>> violations;
  for (auto [u, v] : g.edges) {
    if (kappa(g, u, v).is_zero() && !two_pentagon_condition(g, u, v))
      violations.emplace_back(u, v);
  }
  return violations;
}

namespace {

struct CompletionSearch {
  int max_n;
  long long budget;
  long long nodes = 0;
  const std::function<void(long long)>* progress;
  std::map<std::string, Graph> found;

  void expand(PartialGraph& s, int last_anchor, int last_neighbor) {
    if (++nodes > budget)
      fail(Errc::search_budget_exceeded, "visited " + std::to_string(nodes) + " states");
    if ((nodes & 0xfffff) == 0 && *progress) (*progress)(nodes);
    int u = -1;
    for (int v = 0; v < s.count; ++v) {
      if (s.open(v)) {
        u = v;
        break;
      }
    }
    if (u < 0) {
      accept(s);
      return;
    }
    int floor_w = (u == last_anchor) ? last_neighbor : u;
    for (int w = floor_w + 1; w < s.count; ++w) {
      if (!s.can_add_edge(u, w)) continue;
      s.add_edge(u, w);
      if (pentagon_completion_feasible(s, max_n)) expand(s, u, w);
      s.remove_edge(u, w);
    }
    if (s.count < max_n && s.count > floor_w) {
      int w = s.add_vertex();
      s.add_edge(u, w);
      if (pentagon_completion_feasible(s, max_n)) expand(s, u, w);
      s.remove_edge(u, w);
      s.pop_vertex();
    }
  }

  void accept(const PartialGraph& s) {
    Graph g = s.to_graph();
    for (auto [u, v] : g.edges)
      if (!two_pentagon_condition(g, u, v)) return;
    Graph canon = canonical_graph(g);
    found.emplace(emit_graph6(canon), std::move(canon));
  }
};

}  // namespace

std::vector<Graph> search_two_pentagon_completions(
    int max_n, long long node_budget, const std::function<void(long long)>& progress) {
  if (max_n < 10) fail(Errc::bad_parameter, "max_n must be >= 10");
  if (max_n > 30) fail(Errc::bad_parameter, "max_n must be <= 30");

  // Seed: edge xy on two pentagons x-x1-u-y1-y and x-x2-v-y2-y meeting only
  // at xy. Labels: x=0 y=1 x1=2 x2=3 y1=4 y2=5 u=6 v=7.
  PartialGraph s;
  s.girth_min = 5;
  for (int i = 0; i < 8; ++i) s.add_vertex();
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {4, 6},
                      {3, 7}, {5, 7}})
    s.add_edge(a, b);

  CompletionSearch search{max_n, node_budget, 0, &progress, {}};
  search.expand(s, -1, -1);

  std::vector<Graph> out;
  for (auto& [key, g] : search.found) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return std::tie(a.n, a.edges) < std::tie(b.n, b.edges);
  });
  return out;
}

std::string classification_json(const ClassificationResult& r) {
  nlohmann::ordered_json doc;
  doc["inspected"] = r.inspected;
  doc["per_n"] = nlohmann::ordered_json::array();
  for (auto& [n, tally] : r.per_n)
    doc["per_n"].push_back({{"n", n}, {"inspected", tally.inspected}, {"flat", tally.flat}});
  doc["flat"] = nlohmann::ordered_json::array();
  for (auto& entry : r.flat)
    doc["flat"].push_back({{"n", entry.n},
                           {"name", entry.name},
                           {"graph6", entry.graph6},
                           {"canonical", entry.canon.bytes}});
  doc["lemma_violations"] = nlohmann::ordered_json::array();
  for (auto& [g6, edge] : r.lemma_violations)
    doc["lemma_violations"].push_back({{"graph6", g6}, {"edge", {edge.first, edge.second}}});
  doc["skipped"] = nlohmann::ordered_json::array();
  for (auto& rec : r.skipped)
    doc["skipped"].push_back({{"index", rec.index}, {"reason", rec.reason}});
  return doc.dump(2) + "\n";
}

std::string classification_table(const ClassificationResult& r) {
  std::ostringstream out;
  out << "inspected: " << r.inspected << "\n";
  out << "flat: " << r.flat.size() << "\n";
  for (auto& entry : r.flat)
    out << "  n=" << entry.n << "  " << entry.name << "  " << entry.graph6 << "\n";
  out << "lemma_violations: " << r.lemma_violations.size() << "\n";
  for (auto& [g6, edge] : r.lemma_violations)
    out << "  " << g6 << "  (" << edge.first << "," << edge.second << ")\n";
  out << "skipped: " << r.skipped.size() << "\n";
  for (auto& rec : r.skipped) out << "  #" << rec.index << "  " << rec.reason << "\n";
  out << "per-n:";
  for (auto& [n, tally] : r.per_n)
    out << "  " << n << ":" << tally.flat << "/" << tally.inspected;
  out << "\n";
  return out.str();
}

}  // namespace ricci
