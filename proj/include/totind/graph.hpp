#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace totind {

using Vertex = int;
using EdgeId = int;

/// Bitset over vertex ids; only valid for graphs of order at most kMaskOrder.
using VertexMask = std::uint64_t;
inline constexpr int kMaskOrder = 64;

/// Unordered vertex pair, stored with u < v once it belongs to a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed input: self-loops, out-of-range ids, violated
/// preconditions on graph queries.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are deduplicated, normalized to u < v and numbered in sorted pair
/// order, so edge ids are a deterministic function of the edge set.
/// Vertex adjacency is a packed bit matrix; `neighbor_mask` is the single-word
/// fast path for n <= 64.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops or ids outside 0..n-1.
  static Graph from_edges(int n, std::span<const Edge> pairs);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  /// Unchecked adjacency lookup; false for u == v.
  bool has_edge(Vertex u, Vertex v) const noexcept {
    const auto row = static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
    return (bits_[row + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(static_cast<std::size_t>(v)).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int max_degree() const noexcept;

  /// Neighborhood of v as a bitset. Requires order() <= kMaskOrder.
  VertexMask neighbor_mask(Vertex v) const;

  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool valid_edge(EdgeId e) const noexcept { return e >= 0 && e < size(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> bits_;
};

Graph from_edge_list(int n, std::span<const Edge> pairs);
Graph from_edge_list(int n, std::initializer_list<Edge> pairs);

/// Mixed subset of V(G) ∪ E(G), the carrier of total independent sets.
struct MixedSubset {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t cardinality() const noexcept { return vertices.size() + edges.size(); }
  friend bool operator==(const MixedSubset&, const MixedSubset&) = default;
};

/// Vertex-vertex adjacency. Throws GraphError for u == v or invalid ids.
bool vertices_adjacent(const Graph& g, Vertex u, Vertex v);
/// Edge-edge adjacency: the edges share an end vertex. Requires e != f.
bool edges_adjacent(const Graph& g, EdgeId e, EdgeId f);
/// Vertex-edge adjacency: v is an end vertex of e. A vertex that is merely a
/// neighbour of an endpoint is not adjacent to the edge.
bool vertex_edge_adjacent(const Graph& g, Vertex v, EdgeId e);

/// Throws GraphError unless every element of s belongs to g and none repeats.
void validate_subset(const Graph& g, const MixedSubset& s);
/// Pairwise non-adjacency of all elements under the three adjacency notions.
bool is_total_independent(const Graph& g, const MixedSubset& s);

/// Subgraph induced by `keep`, relabeled 0..|keep|-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_connected(const Graph& g);
bool is_discrete(const Graph& g) noexcept;
bool is_complete(const Graph& g) noexcept;
/// Backtracking search for a spanning cycle. False for n < 3.
bool is_hamiltonian(const Graph& g);

/// Neighbour bitsets for all vertices; throws GraphError when n > 64.
std::vector<VertexMask> adjacency_masks(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace totind
