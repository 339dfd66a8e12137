#ifndef RICCI_NAMED_HPP
#define RICCI_NAMED_HPP

#include <string>

#include "ricci/graph.hpp"

namespace ricci {

// Generalized Petersen graph GP(n, k): outer cycle 0..n-1, spokes i -- n+i,
// inner edges n+i -- n+((i+k) mod n). Requires n >= 3 and 1 <= k < n/2.
Graph generalized_petersen(int n, int k);

Graph cycle_graph(int n);  // C_n, n >= 3

Graph petersen_graph();      // GP(5,2)
Graph dodecahedral_graph();  // GP(10,2)

// 12-cycle x1-x2-...-x12-x1 (vertices 0..11, x_i = i-1) plus the chords
// {x1,x7}, {x2,x10}, {x3,x8}, {x4,x12}, {x5,x9}, {x6,x11}.
Graph triplex_graph();

// Accepts: petersen | triplex | dodecahedron | cycle:n | gp:n:k
Graph named_graph(const std::string& name);

}  // namespace ricci

#endif
