#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "totind/graph.hpp"

namespace totind {

/// Raised for malformed text input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// graph6: N(n) header, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
/// packed big-endian in 6-bit groups, each offset by 63, zero padded.
std::string emit_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph parse_graph6(std::string_view line);

/// "n <order>" followed by "u v" lines; blank lines and '#' comments ignored.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// One graph per non-blank, non-comment line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace totind
