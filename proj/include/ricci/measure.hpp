#ifndef RICCI_MEASURE_HPP
#define RICCI_MEASURE_HPP

#include <map>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Sparse probability measure on vertices: every stored mass is > 0 and the
// masses sum to exactly 1.
class ProbMeasure {
 public:
  using Support = std::map<int, Rational>;

  explicit ProbMeasure(Support masses);

  const Support& support() const { return masses_; }
  Rational at(int v) const;

  friend bool operator==(const ProbMeasure&, const ProbMeasure&) = default;

 private:
  Support masses_;
};

// The idleness-p neighborhood measure of x: mass p at x, (1-p)/deg(x) at
// each neighbor, 0 elsewhere. Support omits x when p = 0 and omits the
// neighbors when p = 1.
ProbMeasure mu(const Graph& g, int x, const Rational& p);

}  // namespace ricci

#endif
