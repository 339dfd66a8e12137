#ifndef RICCI_GENERATE_HPP
#define RICCI_GENERATE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

struct GenerationConfig {
  int n = 10;                       // target vertex count, even
  int girth_min = 5;                // no cycle shorter than this
  bool prune_two_pentagon = false;  // extra necessary-condition pruning
};

// Cubic graph under construction over at most 32 vertices: adjacency
// bitmasks, degrees never exceeding 3, and no cycle shorter than girth_min
// among the edges added so far (enforced by callers via can_add_edge).
struct PartialGraph {
  int count = 0;
  int girth_min = 5;
  std::array<uint32_t, 32> adj{};
  std::array<uint8_t, 32> deg{};

  bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
  bool open(int v) const { return deg[v] < 3; }

  int add_vertex() { return count++; }
  void pop_vertex() { --count; }

  void add_edge(int u, int v) {
    adj[u] |= uint32_t{1} << v;
    adj[v] |= uint32_t{1} << u;
    ++deg[u];
    ++deg[v];
  }
  void remove_edge(int u, int v) {
    adj[u] &= ~(uint32_t{1} << v);
    adj[v] &= ~(uint32_t{1} << u);
    --deg[u];
    --deg[v];
  }

  // BFS distance between introduced vertices, capped: returns cap+1 when
  // the distance exceeds cap (or b is unreachable).
  int dist_capped(int a, int b, int cap) const;

  // Degree bounds plus girth: the edge may be added iff both endpoints are
  // open, the edge is absent, and d(u,v) >= girth_min - 1.
  bool can_add_edge(int u, int v) const;

  Graph to_graph() const;
};

// True while every saturated edge (both endpoints of degree 3) can still
// end up on two 5-cycles meeting only at that edge in some completion with
// at most max_n vertices. A sound overapproximation: distances only shrink
// as edges arrive, so any missing pentagon link needs current distance >= 4
// (>= 3 between the pentagon's second and fourth vertex), open degree slots
// on its endpoints, and room in the vertex budget.
bool pentagon_completion_feasible(const PartialGraph& s, int max_n);

// Emits exactly one representative (canonically labeled, ordered by
// canonical form) per isomorphism class of connected cubic graphs on
// config.n vertices with girth >= config.girth_min. The search fills the
// least open vertex slot first, introduces new vertices in label order and
// adds neighbors ascending, so each labeled graph is built exactly once;
// classes are deduplicated by canonical form.
void generate(const GenerationConfig& config, const std::function<void(const Graph&)>& sink,
              const std::function<void(long long)>& progress = {});
std::vector<Graph> generate(const GenerationConfig& config);

struct IngestStats {
  long read = 0;
  long kept = 0;
  long rejected = 0;
  std::vector<std::pair<long, std::string>> errors;  // (line number, message)
};

// Parses graph6 lines, keeps connected 3-regular graphs with girth >=
// filters.girth_min, and forwards them to sink. Malformed lines abort with
// MalformedGraph6 when strict, otherwise become error records.
IngestStats ingest_graph6(std::istream& in, const GenerationConfig& filters, bool strict,
                          const std::function<void(const Graph&)>& sink);

}  // namespace ricci

#endif
