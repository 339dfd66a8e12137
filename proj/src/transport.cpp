#include "ricci/transport.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ricci/error.hpp"

namespace ricci {

std::map<int, Rational> TransportPlan::row_sums() const {
  std::map<int, Rational> out;
  for (auto& [key, mass] : entries) {
    auto [it, fresh] = out.try_emplace(key.first, mass);
    if (!fresh) it->second += mass;
  }
  return out;
}

std::map<int, Rational> TransportPlan::col_sums() const {
  std::map<int, Rational> out;
  for (auto& [key, mass] : entries) {
    auto [it, fresh] = out.try_emplace(key.second, mass);
    if (!fresh) it->second += mass;
  }
  return out;
}

namespace {

long long checked_lcm(long long a, long long b) {
  long long g = std::gcd(a, b);
  __int128 l = (__int128)(a / g) * b;
  if (l > INT64_MAX) fail(Errc::overflow, "common denominator exceeds 64 bits");
  return static_cast<long long>(l);
}

// ---------------------------------------------------------------------------
// Minimum-cost flow on the tiny bipartite transportation network
//   source -> supply nodes -> demand nodes -> sink.
// Costs are nonnegative hop counts; augmentation always follows a shortest
// (Bellman-Ford) path in the residual network, which keeps every partial
// flow optimal for the amount shipped so far.
// ---------------------------------------------------------------------------
struct FlowNetwork {
  struct Arc {
    int to;
    long long cap;
    long long cost;
  };

  int nodes;
  std::vector<Arc> arcs;                // arc 2k and its reverse 2k+1
  std::vector<std::vector<int>> out;    // node -> arc indices

  explicit FlowNetwork(int n) : nodes(n), out(n) {}

  void add_arc(int from, int to, long long cap, long long cost) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap, cost});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0, -cost});
  }

  // Sends `amount` units from s to t along repeated shortest paths.
  // Returns the total cost; the remaining forward capacities encode the flow.
  long long min_cost_flow(int s, int t, long long amount) {
    long long total_cost = 0;
    while (amount > 0) {
      std::vector<long long> dist(nodes, INT64_MAX);
      std::vector<int> via(nodes, -1);
      dist[s] = 0;
      bool relaxed = true;
      for (int round = 0; round < nodes && relaxed; ++round) {
        relaxed = false;
        for (int v = 0; v < nodes; ++v) {
          if (dist[v] == INT64_MAX) continue;
          for (int id : out[v]) {
            const Arc& a = arcs[id];
            if (a.cap > 0 && dist[v] + a.cost < dist[a.to]) {
              dist[a.to] = dist[v] + a.cost;
              via[a.to] = id;
              relaxed = true;
            }
          }
        }
      }
      if (dist[t] == INT64_MAX)
        fail(Errc::invalid_measure, "transportation network infeasible");
      long long push = amount;
      for (int v = t; v != s; v = arcs[via[v] ^ 1].to)
        push = std::min(push, arcs[via[v]].cap);
      for (int v = t; v != s; v = arcs[via[v] ^ 1].to) {
        arcs[via[v]].cap -= push;
        arcs[via[v] ^ 1].cap += push;
      }
      total_cost += push * dist[t];
      amount -= push;
    }
    return total_cost;
  }
};

void check_measure(const Graph& g, const ProbMeasure& m) {
  for (auto& [v, mass] : m.support())
    if (v >= g.n)
      fail(Errc::invalid_measure, "support vertex " + std::to_string(v) + " outside graph");
}

}  // namespace

W1Result w1(const Graph& g, const ProbMeasure& m1, const ProbMeasure& m2) {
  check_measure(g, m1);
  check_measure(g, m2);
  if (!is_connected(g)) fail(Errc::disconnected_graph, "w1 needs a connected graph");

  std::vector<int> sources, targets;
  for (auto& [v, mass] : m1.support()) sources.push_back(v);
  for (auto& [v, mass] : m2.support()) targets.push_back(v);

  long long scale = 1;
  for (auto& [v, mass] : m1.support()) scale = checked_lcm(scale, mass.den());
  for (auto& [v, mass] : m2.support()) scale = checked_lcm(scale, mass.den());

  const int a = static_cast<int>(sources.size());
  const int b = static_cast<int>(targets.size());
  const int src = a + b, snk = a + b + 1;
  FlowNetwork net(a + b + 2);
  for (int i = 0; i < a; ++i) {
    long long supply = m1.at(sources[i]).num() * (scale / m1.at(sources[i]).den());
    net.add_arc(src, i, supply, 0);
  }
  for (int j = 0; j < b; ++j) {
    long long demand = m2.at(targets[j]).num() * (scale / m2.at(targets[j]).den());
    net.add_arc(a + j, snk, demand, 0);
  }
  std::vector<int> cost_arc_base(a);
  for (int i = 0; i < a; ++i) {
    auto dist = bfs_distances(g, sources[i]);
    cost_arc_base[i] = static_cast<int>(net.arcs.size());
    for (int j = 0; j < b; ++j) net.add_arc(i, a + j, scale, dist[targets[j]]);
  }

  long long total_cost = net.min_cost_flow(src, snk, scale);

  W1Result result;
  result.distance = Rational(total_cost, scale);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      long long sent = scale - net.arcs[cost_arc_base[i] + 2 * j].cap;
      if (sent > 0)
        result.plan.entries[{sources[i], targets[j]}] = Rational(sent, scale);
    }
  }
  return result;
}

Rational w1_uniform_regular(const Graph& g, int x, int y) {
  auto profile = degree_profile(g);
  if (!profile.regular)
    fail(Errc::not_regular, "degrees range " + std::to_string(profile.min_degree) + ".." +
                                std::to_string(profile.max_degree));
  if (x < 0 || x >= g.n || y < 0 || y >= g.n || !g.has_edge(x, y))
    fail(Errc::not_adjacent,
         "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  if (!is_connected(g)) fail(Errc::disconnected_graph, "w1 needs a connected graph");

  const int d = *profile.regular;
  std::vector<int> bx{x}, by{y};
  bx.insert(bx.end(), g.adj[x].begin(), g.adj[x].end());
  by.insert(by.end(), g.adj[y].begin(), g.adj[y].end());
  const int k = d + 1;

  std::vector<std::vector<int>> cost(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    auto dist = bfs_distances(g, bx[i]);
    for (int j = 0; j < k; ++j) cost[i][j] = dist[by[j]];
  }

  // Exhaustive assignment over the k! bijections with a running-sum cut.
  int best = INT32_MAX;
  std::vector<bool> used(k, false);
  auto descend = [&](auto&& self, int row, int acc) -> void {
    if (acc >= best) return;
    if (row == k) {
      best = acc;
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (!used[j]) {
        used[j] = true;
        self(self, row + 1, acc + cost[row][j]);
        used[j] = false;
      }
    }
  };
  descend(descend, 0, 0);
  return Rational(best, k);
}

}  // namespace ricci
