#include "ricci/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "ricci/error.hpp"

namespace ricci {

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1) fail(Errc::bad_parameter, "graph needs at least one vertex");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::index_out_of_range,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
               std::to_string(n - 1));
    if (u == v) fail(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second)
      fail(Errc::duplicate_edge,
           "duplicate edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
  }
  g.edges.assign(seen.begin(), seen.end());
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n)
    fail(Errc::index_out_of_range, "bfs source " + std::to_string(source));
  std::vector<int> dist(g.n, unreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v]) {
      if (dist[w] == unreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == unreachable; });
}

namespace {

// Shortest path u..v avoiding the edge uv itself; unreachable if none.
int detour_distance(const Graph& g, int u, int v) {
  std::vector<int> dist(g.n, unreachable);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : g.adj[a]) {
      if (a == u && b == v) continue;
      if (a == v && b == u) continue;
      if (dist[b] == unreachable) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
    }
  }
  return dist[v];
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  // Per-edge BFS with that edge removed: shortest cycle through edge uv has
  // length detour(u,v) + 1. Exact, and cheap at this scale.
  int best = unreachable;
  for (auto [u, v] : g.edges) {
    int d = detour_distance(g, u, v);
    if (d != unreachable && (best == unreachable || d + 1 < best)) best = d + 1;
  }
  if (best == unreachable) return std::nullopt;
  return best;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.min_degree = g.degree(0);
  p.max_degree = g.degree(0);
  for (int v = 1; v < g.n; ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  if (p.min_degree == p.max_degree) p.regular = p.min_degree;
  return p;
}

namespace {

std::array<int, 5> normalize_cycle(std::array<int, 5> c) {
  // Least tuple over the 10 rotations/reflections of a 5-cycle.
  std::array<int, 5> best = c;
  for (int flip = 0; flip < 2; ++flip) {
    for (int r = 0; r < 5; ++r) {
      std::array<int, 5> cand;
      for (int i = 0; i < 5; ++i) cand[i] = c[(r + i) % 5];
      best = std::min(best, cand);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

}  // namespace

std::vector<std::array<int, 5>> five_cycles_through_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
    fail(Errc::edge_not_present,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
  std::set<std::array<int, 5>> out;
  // A 5-cycle through uv is a path u-a-b-c-v on fresh vertices.
  for (int a : g.adj[u]) {
    if (a == v) continue;
    for (int c : g.adj[v]) {
      if (c == u || c == a) continue;
      for (int b : g.adj[a]) {
        if (b == u || b == v || b == a || b == c) continue;
        if (!g.has_edge(b, c)) continue;
        out.insert(normalize_cycle({u, a, b, c, v}));
      }
    }
  }
  return {out.begin(), out.end()};
}

bool two_pentagon_condition(const Graph& g, int u, int v) {
  auto cycles = five_cycles_through_edge(g, u, v);
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      int shared = 0;
      for (int a : cycles[i])
        for (int b : cycles[j])
          if (a == b) ++shared;
      // Both contain u and v; disjoint otherwise means shared == 2.
      if (shared == 2) return true;
    }
  }
  return false;
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0)
    fail(Errc::malformed_edge_list, "expected header line 'n m'");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      fail(Errc::malformed_edge_list, "expected edge line " + std::to_string(i + 1));
    pairs.emplace_back(u, v);
  }
  return from_edge_list(n, pairs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n << " " << g.edges.size() << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

}  // namespace ricci
