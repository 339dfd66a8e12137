#ifndef RICCI_CANONICAL_HPP
#define RICCI_CANONICAL_HPP

#include <compare>
#include <string>

#include "ricci/graph.hpp"

namespace ricci {

// Labeling-invariant identifier of an isomorphism class: the graph6 line of
// the canonically relabeled graph. Equal forms iff isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// The canonically relabeled graph itself (supported for n <= 64).
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace ricci

#endif
