#include "ricci/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ricci/error.hpp"
#include "ricci/graph6.hpp"

namespace ricci {

namespace {

// Canonical labeling by iterated equitable refinement plus individualization
// backtracking. At each leaf (discrete partition) the upper-triangle
// adjacency bits of the relabeled graph are packed column by column (graph6
// bit order) and the lexicographically least encoding over all leaves wins.
// Cell selection (first non-singleton) and split ordering (by neighbor count)
// are labeling-invariant, so isomorphic graphs reach identical minima.
// Plenty fast at desk scale (n <= 24); no Aut-group pruning is attempted.
struct Canonicalizer {
  int n;
  std::vector<uint64_t> adj;
  std::vector<uint8_t> best_bits;
  std::vector<int> best_label;  // position -> vertex
  bool have_best = false;

  explicit Canonicalizer(const Graph& g) : n(g.n), adj(g.n, 0) {
    for (auto [u, v] : g.edges) {
      adj[u] |= uint64_t{1} << v;
      adj[v] |= uint64_t{1} << u;
    }
  }

  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t si = 0; si < cells.size() && !changed; ++si) {
        uint64_t splitter = 0;
        for (int v : cells[si]) splitter |= uint64_t{1} << v;
        for (size_t ti = 0; ti < cells.size(); ++ti) {
          if (cells[ti].size() < 2) continue;
          // group members by number of neighbors inside the splitter cell
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cells[ti].size());
          for (int v : cells[ti])
            keyed.emplace_back(std::popcount(adj[v] & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          if (keyed.front().first == keyed.back().first) continue;
          Cells pieces;
          int prev_key = keyed.front().first - 1;
          for (auto& [k, v] : keyed) {
            if (k != prev_key) {
              pieces.emplace_back();
              prev_key = k;
            }
            pieces.back().push_back(v);
          }
          cells[ti] = std::move(pieces.front());
          cells.insert(cells.begin() + ti + 1, pieces.begin() + 1, pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  void encode(const std::vector<int>& label, std::vector<uint8_t>& bits) const {
    bits.clear();
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j) {
      uint64_t row = adj[label[j]];
      for (int i = 0; i < j; ++i)
        bits.push_back((row >> label[i]) & 1);
    }
  }

  void search(Cells cells) {
    refine(cells);
    size_t split = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        split = i;
        break;
      }
    }
    if (split == cells.size()) {
      std::vector<int> label(n);
      for (int i = 0; i < n; ++i) label[i] = cells[i][0];
      std::vector<uint8_t> bits;
      encode(label, bits);
      if (!have_best || bits < best_bits) {
        best_bits = std::move(bits);
        best_label = std::move(label);
        have_best = true;
      }
      return;
    }
    for (int v : cells[split]) {
      Cells child = cells;
      std::vector<int> rest;
      for (int w : cells[split])
        if (w != v) rest.push_back(w);
      child[split] = {v};
      child.insert(child.begin() + split + 1, std::move(rest));
      search(std::move(child));
    }
  }

  Graph run() {
    Cells start(1);
    start[0].resize(n);
    for (int i = 0; i < n; ++i) start[0][i] = i;
    search(std::move(start));
    std::vector<int> pos(n);  // vertex -> canonical position
    for (int i = 0; i < n; ++i) pos[best_label[i]] = i;
    Graph out;
    out.n = n;
    out.adj.assign(n, {});
    for (int v = 0; v < n; ++v) {
      uint64_t row = adj[v];
      while (row) {
        int w = std::countr_zero(row);
        row &= row - 1;
        if (v < w) out.edges.emplace_back(std::minmax(pos[v], pos[w]));
      }
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (auto [u, w] : out.edges) {
      out.adj[u].push_back(w);
      out.adj[w].push_back(u);
    }
    for (auto& row : out.adj) std::sort(row.begin(), row.end());
    return out;
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.n > 64) fail(Errc::unsupported_size, "canonical labeling supports n <= 64");
  return Canonicalizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  return {emit_graph6(canonical_graph(g))};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ricci
