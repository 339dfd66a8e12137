#include "ricci/graph6.hpp"

#include <algorithm>

#include "ricci/error.hpp"

namespace ricci {

namespace {

constexpr int bias = 63;
constexpr int max_parse_n = 4096;  // guards against absurd size headers

int data_byte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) fail(Errc::malformed_graph6, "character outside 63..126");
  return u - bias;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
  if (line.empty()) fail(Errc::malformed_graph6, "empty line");
  size_t pos = 0;
  long n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      fail(Errc::malformed_graph6, "8-byte size extension not supported");
    if (line.size() < 4) fail(Errc::malformed_graph6, "truncated size extension");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | data_byte(line[i]);
    pos = 4;
  } else {
    n = data_byte(line[0]);
    pos = 1;
  }
  if (n < 1) fail(Errc::malformed_graph6, "graph must have at least one vertex");
  if (n > max_parse_n) fail(Errc::malformed_graph6, "size byte too large");

  long nbits = n * (n - 1) / 2;
  size_t expect = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() - pos != expect)
    fail(Errc::malformed_graph6, "wrong data length for n=" + std::to_string(n));

  Graph g;
  g.n = static_cast<int>(n);
  g.adj.assign(g.n, {});
  long bit = 0;
  int value = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (bit % 6 == 0) value = data_byte(line[pos + bit / 6]);
      if (value & (1 << (5 - bit % 6))) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
        g.edges.emplace_back(u, v);
      }
    }
  }
  // neighbor lists come out sorted by construction order; edges need sorting
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + bias));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + bias));
    out.push_back(static_cast<char>((g.n & 63) + bias));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + bias));
  return out;
}

}  // namespace ricci
