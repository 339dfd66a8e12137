#include "ricci/named.hpp"

#include <charconv>
#include <vector>

#include "ricci/error.hpp"

namespace ricci {

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    fail(Errc::bad_parameter,
         "gp:" + std::to_string(n) + ":" + std::to_string(k) + " needs n >= 3, 1 <= k < n/2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return from_edge_list(2 * n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(Errc::bad_parameter, "cycle:" + std::to_string(n) + " needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, edges);
}

Graph petersen_graph() { return generalized_petersen(5, 2); }

Graph dodecahedral_graph() { return generalized_petersen(10, 2); }

Graph triplex_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 12; ++i) edges.emplace_back(i, (i + 1) % 12);
  edges.emplace_back(0, 6);    // x1  x7
  edges.emplace_back(1, 9);    // x2  x10
  edges.emplace_back(2, 7);    // x3  x8
  edges.emplace_back(3, 11);   // x4  x12
  edges.emplace_back(4, 8);    // x5  x9
  edges.emplace_back(5, 10);   // x6  x11
  return from_edge_list(12, edges);
}

namespace {

int parse_int(const std::string& text, const std::string& name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(Errc::bad_parameter, "bad number '" + text + "' in '" + name + "'");
  return value;
}

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (name == "triplex") return triplex_graph();
  if (name == "dodecahedron") return dodecahedral_graph();
  if (name.rfind("cycle:", 0) == 0)
    return cycle_graph(parse_int(name.substr(6), name));
  if (name.rfind("gp:", 0) == 0) {
    auto rest = name.substr(3);
    auto sep = rest.find(':');
    if (sep == std::string::npos)
      fail(Errc::bad_parameter, "expected gp:n:k, got '" + name + "'");
    return generalized_petersen(parse_int(rest.substr(0, sep), name),
                                parse_int(rest.substr(sep + 1), name));
  }
  fail(Errc::unknown_name, "no fixture named '" + name + "'");
}

}  // namespace ricci
