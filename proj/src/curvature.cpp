#include "ricci/curvature.hpp"

#include <algorithm>
#include <sstream>

#include "ricci/error.hpp"
#include "ricci/transport.hpp"

#include "json.hpp"

namespace ricci {

Rational kappa_p(const Graph& g, int x, int y, const Rational& p) {
  if (p.sign() < 0 || p > Rational(1))
    fail(Errc::idleness_out_of_range, "idleness " + p.str() + " outside [0,1]");
  if (x < 0 || x >= g.n || y < 0 || y >= g.n || !g.has_edge(x, y))
    fail(Errc::not_adjacent,
         "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  if (!is_connected(g)) fail(Errc::disconnected_graph, "curvature needs a connected graph");
  return Rational(1) - w1(g, mu(g, x, p), mu(g, y, p)).distance;
}

Rational kappa(const Graph& g, int x, int y) {
  auto profile = degree_profile(g);
  if (!profile.regular)
    fail(Errc::not_regular, "degrees range " + std::to_string(profile.min_degree) + ".." +
                                std::to_string(profile.max_degree));
  int d = *profile.regular;
  Rational idle = Rational(1) - w1_uniform_regular(g, x, y);
  return Rational(d + 1, d) * idle;
}

CurvatureReport curvature_report(const Graph& g) {
  auto profile = degree_profile(g);
  if (!profile.regular)
    fail(Errc::not_regular, "degrees range " + std::to_string(profile.min_degree) + ".." +
                                std::to_string(profile.max_degree));
  if (!is_connected(g)) fail(Errc::disconnected_graph, "curvature needs a connected graph");
  int d = *profile.regular;

  CurvatureReport report;
  bool first = true;
  for (auto [u, v] : g.edges) {
    EdgeCurvature ec;
    ec.u = u;
    ec.v = v;
    ec.kappa_idle = Rational(1) - w1_uniform_regular(g, u, v);
    ec.kappa = Rational(d + 1, d) * ec.kappa_idle;
    if (first || ec.kappa < report.min_kappa) report.min_kappa = ec.kappa;
    if (first || ec.kappa > report.max_kappa) report.max_kappa = ec.kappa;
    first = false;
    if (!ec.kappa.is_zero()) report.all_flat = false;
    report.edges.push_back(std::move(ec));
  }
  return report;
}

bool is_ricci_flat(const Graph& g) { return curvature_report(g).all_flat; }

IdlenessReport idleness_report(const Graph& g, const Rational& p) {
  IdlenessReport report;
  report.p = p;
  bool first = true;
  for (auto [u, v] : g.edges) {
    EdgeCurvature ec;
    ec.u = u;
    ec.v = v;
    ec.kappa = kappa_p(g, u, v, p);
    ec.kappa_idle = ec.kappa;
    if (first || ec.kappa < report.min_kappa) report.min_kappa = ec.kappa;
    if (first || ec.kappa > report.max_kappa) report.max_kappa = ec.kappa;
    first = false;
    if (!ec.kappa.is_zero()) report.all_flat = false;
    report.edges.push_back(std::move(ec));
  }
  return report;
}

namespace {

std::string json_lines(const std::vector<EdgeCurvature>& edges, const Rational& min_kappa,
                       const Rational& max_kappa, bool all_flat) {
  std::ostringstream out;
  for (const auto& e : edges) {
    nlohmann::ordered_json row;
    row["u"] = e.u;
    row["v"] = e.v;
    row["kappa"] = e.kappa.str();
    out << row.dump() << "\n";
  }
  nlohmann::ordered_json summary;
  summary["edges"] = edges.size();
  summary["min_kappa"] = min_kappa.str();
  summary["max_kappa"] = max_kappa.str();
  summary["all_flat"] = all_flat;
  out << summary.dump() << "\n";
  return out.str();
}

std::string table(const std::vector<EdgeCurvature>& edges, bool with_idle,
                  const Rational& min_kappa, const Rational& max_kappa, bool all_flat) {
  size_t wu = 1, wv = 1, wi = 10, wk = 5;
  for (const auto& e : edges) {
    wu = std::max(wu, std::to_string(e.u).size());
    wv = std::max(wv, std::to_string(e.v).size());
    wi = std::max(wi, e.kappa_idle.str().size());
    wk = std::max(wk, e.kappa.str().size());
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::ostringstream out;
  out << pad("u", wu) << "  " << pad("v", wv) << "  ";
  if (with_idle) out << pad("kappa_idle", wi) << "  ";
  out << "kappa\n";
  for (const auto& e : edges) {
    out << pad(std::to_string(e.u), wu) << "  " << pad(std::to_string(e.v), wv) << "  ";
    if (with_idle) out << pad(e.kappa_idle.str(), wi) << "  ";
    out << e.kappa.str() << "\n";
  }
  out << "# edges=" << edges.size() << " min_kappa=" << min_kappa.str()
      << " max_kappa=" << max_kappa.str() << " all_flat=" << (all_flat ? "true" : "false")
      << "\n";
  return out.str();
}

}  // namespace

std::string to_json_lines(const CurvatureReport& r) {
  return json_lines(r.edges, r.min_kappa, r.max_kappa, r.all_flat);
}

std::string to_json_lines(const IdlenessReport& r) {
  return json_lines(r.edges, r.min_kappa, r.max_kappa, r.all_flat);
}

std::string to_table(const CurvatureReport& r) {
  return table(r.edges, true, r.min_kappa, r.max_kappa, r.all_flat);
}

std::string to_table(const IdlenessReport& r) {
  return table(r.edges, false, r.min_kappa, r.max_kappa, r.all_flat);
}

}  // namespace ricci
