#ifndef RICCI_CURVATURE_HPP
#define RICCI_CURVATURE_HPP

#include <string>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/measure.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// kappa_p(x,y) = 1 - W1(mu_x^p, mu_y^p) for an edge xy of a connected
// graph; always in [-2, 1].
Rational kappa_p(const Graph& g, int x, int y, const Rational& p);

// Limit curvature of an edge of a connected d-regular graph, computed via
// the closed form kappa = ((d+1)/d) * kappa_{1/(d+1)}. Raises NotRegular
// otherwise; there is no general-graph closed form here.
Rational kappa(const Graph& g, int x, int y);

struct EdgeCurvature {
  int u = 0;
  int v = 0;
  Rational kappa_idle;  // kappa_p at p = 1/(d+1)
  Rational kappa;
};

struct CurvatureReport {
  std::vector<EdgeCurvature> edges;  // in edge-list order
  Rational min_kappa;
  Rational max_kappa;
  bool all_flat = true;  // every per-edge kappa == 0 exactly
};

CurvatureReport curvature_report(const Graph& g);
bool is_ricci_flat(const Graph& g);

// Per-edge kappa_p at one fixed idleness; defined for any connected graph.
struct IdlenessReport {
  Rational p;
  std::vector<EdgeCurvature> edges;  // kappa_idle == kappa == kappa_p here
  Rational min_kappa;
  Rational max_kappa;
  bool all_flat = true;
};

IdlenessReport idleness_report(const Graph& g, const Rational& p);

// JSON lines {"u":int,"v":int,"kappa":"num/den"} plus a trailing summary
// record; and an aligned text table.
std::string to_json_lines(const CurvatureReport& r);
std::string to_json_lines(const IdlenessReport& r);
std::string to_table(const CurvatureReport& r);
std::string to_table(const IdlenessReport& r);

}  // namespace ricci

#endif
