#include <cstdint>

#include "totind/io.hpp"

namespace totind {

namespace {

constexpr int kOffset = 63;

void append_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
  }
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int value = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kOffset));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty input");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) + " outside 63..126");
  }

  std::size_t pos = 0;
  auto take = [&](int groups) {
    long value = 0;
    for (int k = 0; k < groups; ++k) {
      if (pos >= line.size()) throw ParseError("graph6: truncated size header");
      value = (value << 6) | (line[pos++] - kOffset);
    }
    return value;
  };
  long n = 0;
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 1 << 20) throw ParseError("graph6: order " + std::to_string(n) + " too large");

  const long bit_count = n * (n - 1) / 2;
  const long expected = (bit_count + 5) / 6;
  if (static_cast<long>(line.size() - pos) != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for order " + std::to_string(n) +
                     ", got " + std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  long index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const int byte = line[pos + static_cast<std::size_t>(index / 6)] - kOffset;
      if ((byte >> (5 - index % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (index % 6 != 0) {
    const int last = line.back() - kOffset;
    const int padding = 6 - static_cast<int>(index % 6);
    if (last & ((1 << padding) - 1)) throw ParseError("graph6: non-zero padding bits");
  }
  return from_edge_list(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> graphs;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    } catch (const GraphError& e) {
      throw ParseError(e.what(), number);
    }
  }
  return graphs;
}

}  // namespace totind
