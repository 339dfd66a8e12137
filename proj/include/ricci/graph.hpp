#ifndef RICCI_GRAPH_HPP
#define RICCI_GRAPH_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace ricci {

// Finite simple undirected graph on vertices 0..n-1. Neighbor lists are
// sorted, every edge appears once in `edges` (with u < v, list sorted) and
// twice across `adj`. Values are immutable after construction; build them
// through from_edge_list or the parsers so the invariants hold. All queries
// are read-only and safe to call concurrently.
struct Graph {
  int n = 1;
  std::vector<std::vector<int>> adj{{}};
  std::vector<std::pair<int, int>> edges;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

inline constexpr int unreachable = -1;

// Exact hop counts from `source`; `unreachable` for other components.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> regular;  // set iff min == max
};
DegreeProfile degree_profile(const Graph& g);

// All 5-cycles containing the edge uv, each reported once as the
// lexicographically least tuple over rotations and reflections.
std::vector<std::array<int, 5>> five_cycles_through_edge(const Graph& g, int u, int v);

// True iff uv lies on two 5-cycles whose shared vertices are exactly
// {u, v} (hence whose only shared edge is uv itself).
bool two_pentagon_condition(const Graph& g, int u, int v);

// Text interchange: first line "n m", then one "u v" line per edge.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ricci

#endif
