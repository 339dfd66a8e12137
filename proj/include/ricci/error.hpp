#ifndef RICCI_ERROR_HPP
#define RICCI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ricci {

// Every failure mode the library raises. The CLI maps these onto exit
// codes: input/configuration problems exit 2, domain violations exit 3.
enum class Errc {
  self_loop,
  duplicate_edge,
  index_out_of_range,
  malformed_graph6,
  malformed_edge_list,
  edge_not_present,
  unknown_name,
  bad_parameter,
  idleness_out_of_range,
  isolated_vertex,
  disconnected_graph,
  invalid_measure,
  not_regular,
  not_adjacent,
  odd_order,
  unsupported_size,
  not_cubic,
  girth_too_small,
  search_budget_exceeded,
  overflow,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::malformed_edge_list: return "MalformedEdgeList";
    case Errc::edge_not_present: return "EdgeNotPresent";
    case Errc::unknown_name: return "UnknownName";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::idleness_out_of_range: return "IdlenessOutOfRange";
    case Errc::isolated_vertex: return "IsolatedVertex";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::invalid_measure: return "InvalidMeasure";
    case Errc::not_regular: return "NotRegular";
    case Errc::not_adjacent: return "NotAdjacent";
    case Errc::odd_order: return "OddOrder";
    case Errc::unsupported_size: return "UnsupportedSize";
    case Errc::not_cubic: return "NotCubic";
    case Errc::girth_too_small: return "GirthTooSmall";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ricci

#endif
