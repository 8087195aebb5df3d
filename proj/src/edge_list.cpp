#include <charconv>
#include <optional>
#include <sstream>

#include "totind/io.hpp"

namespace totind {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> order;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto parts = tokens(line);
    if (parts.empty()) {
      if (text.empty()) break;
      continue;
    }
    if (!order) {
      if (parts.size() != 2 || parts[0] != "n") throw ParseError("expected header 'n <order>'", number);
      order = to_int(parts[1], number);
      if (*order < 1) throw ParseError("order must be positive", number);
      continue;
    }
    if (parts.size() != 2) throw ParseError("expected 'u v'", number);
    edges.push_back({to_int(parts[0], number), to_int(parts[1], number)});
    edge_lines.push_back(number);
  }
  if (!order) throw ParseError("missing header 'n <order>'");

  // Report graph errors against the offending line.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || u >= *order || v < 0 || v >= *order) {
      throw ParseError("vertex out of range 0.." + std::to_string(*order - 1), edge_lines[i]);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), edge_lines[i]);
  }
  return from_edge_list(*order, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace totind
