#include "totind/generators.hpp"

#include <vector>

namespace totind {

namespace {

void require_positive(int n, const char* family) {
  if (n < 1) throw GraphError(std::string(family) + " requires a positive order, got " + std::to_string(n));
}

}  // namespace

Graph complete(int n) {
  require_positive(n, "complete");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw GraphError("complete_bipartite requires both parts non-empty, got " + std::to_string(a) + "," +
                     std::to_string(b));
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return from_edge_list(a + b, edges);
}

Graph path(int n) {
  require_positive(n, "path");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return from_edge_list(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle requires order >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return from_edge_list(n, edges);
}

Graph star(int leaves) {
  require_positive(leaves, "star");
  return complete_bipartite(1, leaves);
}

Graph discrete(int n) {
  require_positive(n, "discrete");
  return from_edge_list(n, std::span<const Edge>{});
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return from_edge_list(10, edges);
}

Graph paper_figure(Figure which) {
  switch (which) {
    case Figure::four_vertex_five_edge:
      // 1-2, 1-3, 2-3, 2-4, 3-4
      return from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    case Figure::alpha_figure:
      // 1-2, 2-3, 2-4
      return from_edge_list(4, {{0, 1}, {1, 2}, {1, 3}});
  }
  throw GraphError("unknown figure");
}

std::string_view to_string(Figure which) {
  switch (which) {
    case Figure::four_vertex_five_edge:
      return "four_vertex_five_edge";
    case Figure::alpha_figure:
      return "alpha_figure";
  }
  return "unknown";
}

}  // namespace totind
