#include "ricci/generate.hpp"

#include <bit>
#include <istream>
#include <map>

#include "ricci/canonical.hpp"
#include "ricci/error.hpp"
#include "ricci/graph6.hpp"

namespace ricci {

int PartialGraph::dist_capped(int a, int b, int cap) const {
  if (a == b) return 0;
  uint32_t reached = uint32_t{1} << a;
  uint32_t frontier = reached;
  for (int step = 1; step <= cap; ++step) {
    uint32_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v];
    }
    next &= ~reached;
    if (next == 0) return cap + 1;
    if (next >> b & 1) return step;
    reached |= next;
    frontier = next;
  }
  return cap + 1;
}

bool PartialGraph::can_add_edge(int u, int v) const {
  if (u == v || !open(u) || !open(v) || has_edge(u, v)) return false;
  // Adding uv closes a cycle of length d(u,v) + 1.
  return dist_capped(u, v, girth_min - 2) > girth_min - 2;
}

Graph PartialGraph::to_graph() const {
  Graph g;
  g.n = count;
  g.adj.assign(count, {});
  for (int v = 0; v < count; ++v) {
    uint32_t row = adj[v] >> (v + 1);
    while (row) {
      int w = v + 1 + std::countr_zero(row);
      row &= row - 1;
      g.edges.emplace_back(v, w);
    }
  }
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  return g;
}

namespace {

// Candidate midpoints q completing the path p - q - r (the inside of a
// pentagon a-p-q-r-b). Returns a mask of usable existing vertices plus
// whether a fresh vertex could serve. Missing links require open slots and
// current distance >= 4 (>= 3 between p and r for a fresh midpoint), since
// distances never grow once edges are added.
struct MiddleOptions {
  uint32_t existing = 0;
  bool fresh = false;
};

MiddleOptions route_middles(const PartialGraph& s, int p, int r, uint32_t excluded) {
  MiddleOptions options;
  for (int q = 0; q < s.count; ++q) {
    if (excluded >> q & 1) continue;
    bool qp = s.has_edge(q, p);
    bool qr = s.has_edge(q, r);
    int missing = (qp ? 0 : 1) + (qr ? 0 : 1);
    if (missing > 0) {
      if (s.deg[q] + missing > 3) continue;
      if (!qp && (!s.open(p) || s.dist_capped(q, p, 3) <= 3)) continue;
      if (!qr && (!s.open(r) || s.dist_capped(q, r, 3) <= 3)) continue;
      if (missing == 2 && s.dist_capped(p, r, 2) <= 2) continue;
    }
    options.existing |= uint32_t{1} << q;
  }
  options.fresh = s.open(p) && s.open(r) && s.dist_capped(p, r, 2) > 2;
  return options;
}

bool edge_pentagons_feasible(const PartialGraph& s, int a, int b, int max_n) {
  int ps[2], rs[2], pi = 0, ri = 0;
  uint32_t row = s.adj[a] & ~(uint32_t{1} << b);
  while (row) {
    ps[pi++] = std::countr_zero(row);
    row &= row - 1;
  }
  row = s.adj[b] & ~(uint32_t{1} << a);
  while (row) {
    rs[ri++] = std::countr_zero(row);
    row &= row - 1;
  }
  uint32_t excluded = (uint32_t{1} << a) | (uint32_t{1} << b) | (uint32_t{1} << ps[0]) |
                      (uint32_t{1} << ps[1]) | (uint32_t{1} << rs[0]) | (uint32_t{1} << rs[1]);

  // The two pentagons must pair {p0,p1} with {r0,r1} one-to-one and use
  // distinct midpoints.
  for (int pairing = 0; pairing < 2; ++pairing) {
    MiddleOptions m0 = route_middles(s, ps[0], rs[pairing], excluded);
    MiddleOptions m1 = route_middles(s, ps[1], rs[1 - pairing], excluded);
    int budget = max_n - s.count;
    bool ok = false;
    if (m0.fresh && m1.fresh && budget >= 2) ok = true;
    if (m0.fresh && m1.existing && budget >= 1) ok = true;
    if (m1.fresh && m0.existing && budget >= 1) ok = true;
    if (m0.existing && m1.existing && std::popcount(m0.existing | m1.existing) >= 2)
      ok = true;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool pentagon_completion_feasible(const PartialGraph& s, int max_n) {
  for (int a = 0; a < s.count; ++a) {
    if (s.open(a)) continue;
    uint32_t row = s.adj[a] >> (a + 1);
    while (row) {
      int b = a + 1 + std::countr_zero(row);
      row &= row - 1;
      if (!s.open(b) && !edge_pentagons_feasible(s, a, b, max_n)) return false;
    }
  }
  return true;
}

namespace {

struct GenSearch {
  int target_n;
  bool prune_pentagon;
  long long nodes = 0;
  const std::function<void(long long)>* progress;
  std::map<std::string, Graph> found;  // canonical graph6 -> canonical graph

  // Extends the least open vertex. While it stays the same, successive
  // neighbors must ascend; a new vertex always takes the next label. Both
  // rules together make every labeled graph reachable along exactly one
  // path, so no partial-state dedup is needed.
  void expand(PartialGraph& s, int last_anchor, int last_neighbor) {
    if ((++nodes & 0xfffff) == 0 && *progress) (*progress)(nodes);
    int u = -1;
    for (int v = 0; v < s.count; ++v) {
      if (s.open(v)) {
        u = v;
        break;
      }
    }
    if (u < 0) {
      if (s.count == target_n) accept(s);
      return;
    }
    int floor_w = (u == last_anchor) ? last_neighbor : u;
    for (int w = floor_w + 1; w < s.count; ++w) {
      if (!s.can_add_edge(u, w)) continue;
      s.add_edge(u, w);
      if (!prune_pentagon || pentagon_completion_feasible(s, target_n))
        expand(s, u, w);
      s.remove_edge(u, w);
    }
    if (s.count < target_n && s.count > floor_w) {
      int w = s.add_vertex();
      s.add_edge(u, w);
      if (!prune_pentagon || pentagon_completion_feasible(s, target_n))
        expand(s, u, w);
      s.remove_edge(u, w);
      s.pop_vertex();
    }
  }

  void accept(const PartialGraph& s) {
    Graph canon = canonical_graph(s.to_graph());
    std::string key = emit_graph6(canon);
    found.emplace(std::move(key), std::move(canon));
  }
};

}  // namespace

void generate(const GenerationConfig& config, const std::function<void(const Graph&)>& sink,
              const std::function<void(long long)>& progress) {
  if (config.n % 2 != 0)
    fail(Errc::odd_order, "no cubic graph has " + std::to_string(config.n) + " vertices");
  if (config.n < 4 || config.n > 24)
    fail(Errc::unsupported_size, "supported vertex counts are even 4..24");
  if (config.girth_min < 3) fail(Errc::bad_parameter, "girth_min must be >= 3");

  GenSearch search{config.n, config.prune_two_pentagon, 0, &progress, {}};
  PartialGraph s;
  s.girth_min = config.girth_min;
  s.add_vertex();
  search.expand(s, -1, -1);
  for (auto& [key, g] : search.found) sink(g);
}

std::vector<Graph> generate(const GenerationConfig& config) {
  std::vector<Graph> out;
  generate(config, [&](const Graph& g) { out.push_back(g); });
  return out;
}

IngestStats ingest_graph6(std::istream& in, const GenerationConfig& filters, bool strict,
                          const std::function<void(const Graph&)>& sink) {
  IngestStats stats;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++stats.read;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error& e) {
      if (strict) throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      stats.errors.emplace_back(line_no, e.what());
      continue;
    }
    bool keep = is_connected(g) && degree_profile(g).regular == 3;
    if (keep && filters.girth_min > 3) {
      auto gi = girth(g);
      keep = gi.has_value() && *gi >= filters.girth_min;
    }
    if (keep) {
      ++stats.kept;
      sink(g);
    } else {
      ++stats.rejected;
    }
  }
  return stats;
}

}  // namespace ricci
