#include "doctest.h"

#include <random>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "ricci/curvature.hpp"
#include "ricci/error.hpp"
#include "ricci/named.hpp"
#include "ricci/transport.hpp"

using namespace ricci;

namespace {

Graph k4() { return from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k33() {
  return from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                            {2, 3}, {2, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("kappa_p at the extremes") {
  Graph p = petersen_graph();
  for (auto [x, y] : p.edges) CHECK(kappa_p(p, x, y, Rational(1)) == Rational(0));
  Graph g4 = k4();
  CHECK(kappa_p(g4, 0, 1, Rational(1, 4)) == Rational(1));
}

TEST_CASE("kappa_p on C5 at idleness zero") {
  Graph c5 = cycle_graph(5);
  // mu_0^0 lives on {1,4}, mu_1^0 on {0,2}; C5 distances:
  // d(1,0)=1 d(1,2)=1 d(4,0)=1 d(4,2)=2
  std::array<std::array<int, 2>, 2> dist{{{1, 1}, {1, 2}}};
  auto lp = oracle::w1_2x2(dist, {Rational(1, 2), Rational(1, 2)},
                           {Rational(1, 2), Rational(1, 2)});
  CHECK(lp == Rational(1));
  CHECK(kappa_p(c5, 0, 1, Rational(0)) == Rational(1) - lp);
  CHECK(kappa_p(c5, 0, 1, Rational(0)) == Rational(0));
}

TEST_CASE("kappa on the flat fixtures is exactly zero") {
  for (const auto& g : {petersen_graph(), triplex_graph(), dodecahedral_graph()})
    for (auto [x, y] : g.edges) CHECK(kappa(g, x, y) == Rational(0));
  for (int n = 6; n <= 12; ++n) {
    Graph c = cycle_graph(n);
    for (auto [x, y] : c.edges) CHECK(kappa(c, x, y) == Rational(0));
  }
}

TEST_CASE("kappa positive fixtures") {
  Graph g4 = k4();
  for (auto [x, y] : g4.edges) {
    CHECK(oracle::w1_uniform(g4, x, y) == Rational(0));
    CHECK(kappa(g4, x, y) == Rational(4, 3));
  }
  Graph c5 = cycle_graph(5);
  for (auto [x, y] : c5.edges) CHECK(kappa(c5, x, y) == Rational(1, 2));
  Graph b = k33();
  for (auto [x, y] : b.edges) {
    CHECK(oracle::w1_uniform(b, x, y) == Rational(1, 2));
    CHECK(kappa(b, x, y) == Rational(2, 3));
  }
}

TEST_CASE("kappa agrees with the general flow route") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 15; ++trial) {
    int d = 2 + static_cast<int>(rng() % 3);
    int n = d + 2 + static_cast<int>(rng() % 8);
    if (n * d % 2 != 0) continue;
    Graph g = oracle::random_connected_regular(rng, d, n);
    Rational p(1, d + 1);
    for (auto [x, y] : g.edges) {
      Rational via_flow =
          Rational(d + 1, d) * (Rational(1) - w1(g, mu(g, x, p), mu(g, y, p)).distance);
      CHECK(kappa(g, x, y) == via_flow);
    }
  }
}

TEST_CASE("cubic kappa is an integer multiple of one third") {
  Graph t = triplex_graph();
  auto report = curvature_report(t);
  for (auto& e : report.edges) CHECK(3 % e.kappa.den() == 0);
}

TEST_CASE("curvature_report and is_ricci_flat") {
  auto rt = curvature_report(triplex_graph());
  CHECK(rt.edges.size() == 18);
  CHECK(rt.all_flat);
  CHECK(rt.min_kappa == Rational(0));
  CHECK(rt.max_kappa == Rational(0));
  for (auto& e : rt.edges) {
    CHECK(e.kappa == Rational(0));
    CHECK(e.kappa_idle == Rational(0));
  }
  CHECK(is_ricci_flat(triplex_graph()));

  auto rd = curvature_report(dodecahedral_graph());
  CHECK(rd.edges.size() == 30);
  CHECK(rd.all_flat);

  auto rc = curvature_report(cycle_graph(5));
  CHECK_FALSE(rc.all_flat);
  CHECK(rc.min_kappa == Rational(1, 2));
  CHECK(rc.max_kappa == Rational(1, 2));
}

TEST_CASE("curvature error paths") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::overflow;
  };
  Graph path = from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(code([&] { kappa(path, 0, 1); }) == Errc::not_regular);
  CHECK(code([&] { curvature_report(path); }) == Errc::not_regular);
  Graph c5 = cycle_graph(5);
  CHECK(code([&] { kappa(c5, 0, 2); }) == Errc::not_adjacent);
  CHECK(code([&] { kappa_p(c5, 0, 2, Rational(1, 2)); }) == Errc::not_adjacent);
  CHECK(code([&] { kappa_p(c5, 0, 1, Rational(2)); }) == Errc::idleness_out_of_range);
  Graph two = from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(code([&] { kappa(two, 0, 1); }) == Errc::disconnected_graph);
  CHECK(code([&] { kappa_p(two, 0, 1, Rational(1, 2)); }) == Errc::disconnected_graph);
  // kappa_p still works on connected non-regular graphs
  CHECK(kappa_p(path, 0, 1, Rational(1)) == Rational(0));
}

TEST_CASE("report serialization") {
  auto report = curvature_report(cycle_graph(5));
  std::string json = to_json_lines(report);
  std::istringstream lines(json);
  std::string line;
  int rows = 0;
  bool saw_summary = false;
  while (std::getline(lines, line)) {
    auto parsed = nlohmann::json::parse(line);
    if (parsed.contains("u")) {
      ++rows;
      CHECK(parsed["kappa"] == "1/2");
    } else {
      saw_summary = true;
      CHECK(parsed["all_flat"] == false);
      CHECK(parsed["min_kappa"] == "1/2");
      CHECK(parsed["edges"] == 5);
    }
  }
  CHECK(rows == 5);
  CHECK(saw_summary);

  std::string table = to_table(report);
  CHECK(table.find("kappa") != std::string::npos);
  CHECK(table.find("1/2") != std::string::npos);
  CHECK(table.find("all_flat=false") != std::string::npos);

  auto idle = idleness_report(cycle_graph(5), Rational(1));
  CHECK(idle.all_flat);
  for (auto& e : idle.edges) CHECK(e.kappa == Rational(0));
}
