#ifndef RICCI_TRANSPORT_HPP
#define RICCI_TRANSPORT_HPP

#include <map>
#include <utility>

#include "ricci/graph.hpp"
#include "ricci/measure.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Joint measure moving m1 to m2: row sums equal m1, column sums equal m2,
// all entries > 0 where stored.
struct TransportPlan {
  std::map<std::pair<int, int>, Rational> entries;

  std::map<int, Rational> row_sums() const;
  std::map<int, Rational> col_sums() const;
};

struct W1Result {
  Rational distance;
  TransportPlan plan;
};

// Exact Wasserstein-1 distance between two vertex measures plus one optimal
// plan. Masses are scaled by their common denominator to integers and the
// bipartite transportation problem over the two supports (hop-count costs)
// is solved by successive shortest augmenting paths; the optimum is then
// rescaled. Only the value is contractual; the plan is whichever optimum
// the solver reaches first.
W1Result w1(const Graph& g, const ProbMeasure& m1, const ProbMeasure& m2);

// W1 between the uniform measures on the closed balls B1(x), B1(y) of a
// d-regular graph (the idleness-1/(d+1) case): equal uniform marginals make
// the transportation polytope a scaled Birkhoff polytope, so the optimum is
// min over bijections sigma: B1(x) -> B1(y) of sum d(u, sigma(u)) / (d+1).
Rational w1_uniform_regular(const Graph& g, int x, int y);

}  // namespace ricci

#endif
