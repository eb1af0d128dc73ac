#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oddfactor/graph.hpp"

namespace oddfactor {

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format:
//   n <count>        first non-comment line
//   <u> <v>          one edge per line, 0 <= u, v < count, u != v
// '#' starts a comment running to end of line; blank lines are ignored.
// Duplicate edges in either orientation are errors.
Graph parse_edge_list(std::string_view text);

/// Canonical text: header, then (min, max) edges ascending, one per line,
/// every line newline-terminated.
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace oddfactor
