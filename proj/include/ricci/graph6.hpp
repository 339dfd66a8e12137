#ifndef RICCI_GRAPH6_HPP
#define RICCI_GRAPH6_HPP

#include <string>

#include "ricci/graph.hpp"

namespace ricci {

// Header-less graph6 line: size byte n+63 for n <= 62, or the 4-byte '~'
// extension, then the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2),
// x(0,3), ... column by column, zero-padded to a multiple of 6, each 6-bit
// group stored as value+63. parse(emit(g)) == g with the same labeling.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

}  // namespace ricci

#endif
