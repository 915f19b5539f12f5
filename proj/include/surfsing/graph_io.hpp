#pragma once

#include "surfsing/cycles.hpp"
#include "surfsing/dualgraph.hpp"

#include <istream>
#include <string>

namespace surfsing {

/// Contents of a graph file: the graph and the (optional) degree vector
/// given by `degree <id> <int>` lines, zero where absent.
struct GraphFile {
  DualGraph graph;
  DegreeVector degrees;
};

/// Line format:
///   vertex <id> selfint=<int> genus=<uint>
///   edge <id1> <id2> [mult=<uint>]
///   degree <id> <int>
/// `#` starts a comment; blank lines are ignored. Structural problems
/// (unknown vertex, self-loop, duplicate id) are reported as ParseError
/// with the offending line.
GraphFile parse_graph(std::istream& in, const std::string& source = "<input>");
GraphFile parse_graph_text(const std::string& text, const std::string& source = "<input>");

} // namespace surfsing
