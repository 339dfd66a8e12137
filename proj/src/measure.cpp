#include "ricci/measure.hpp"

#include "ricci/error.hpp"

namespace ricci {

ProbMeasure::ProbMeasure(Support masses) : masses_(std::move(masses)) {
  if (masses_.empty()) fail(Errc::invalid_measure, "empty support");
  Rational total(0);
  for (auto& [v, mass] : masses_) {
    if (v < 0) fail(Errc::invalid_measure, "negative vertex index");
    if (mass.sign() <= 0)
      fail(Errc::invalid_measure, "non-positive mass at vertex " + std::to_string(v));
    total += mass;
  }
  if (total != Rational(1))
    fail(Errc::invalid_measure, "masses sum to " + total.str() + ", not 1/1");
}

Rational ProbMeasure::at(int v) const {
  auto it = masses_.find(v);
  return it == masses_.end() ? Rational(0) : it->second;
}

ProbMeasure mu(const Graph& g, int x, const Rational& p) {
  if (x < 0 || x >= g.n) fail(Errc::index_out_of_range, "vertex " + std::to_string(x));
  if (p.sign() < 0 || p > Rational(1))
    fail(Errc::idleness_out_of_range, "idleness " + p.str() + " outside [0,1]");
  int d = g.degree(x);
  if (d == 0 && p != Rational(1))
    fail(Errc::isolated_vertex, "vertex " + std::to_string(x) + " has no neighbors");
  ProbMeasure::Support support;
  if (p.sign() > 0) support[x] = p;
  if (p != Rational(1)) {
    Rational share = (Rational(1) - p) / Rational(d);
    for (int y : g.adj[x]) support[y] = share;
  }
  return ProbMeasure(std::move(support));
}

}  // namespace ricci
