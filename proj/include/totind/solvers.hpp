#pragma once

#include <optional>
#include <span>
#include <vector>

#include "totind/graph.hpp"

namespace totind {

/// An exact optimum together with one optimal witness.
///
/// Witnesses are the lexicographically smallest optimal object under the
/// graph's element order (vertex ids, then edge ids; total independent sets
/// order all edges before all vertices).
template <class Witness>
struct Solved {
  int value = 0;
  Witness witness{};
};

// Independence number α(G). Branch and bound on include/exclude of the
// lowest remaining vertex, pruned by a greedy clique cover. Order <= 64.
Solved<std::vector<Vertex>> independence_number(const Graph& g);

// Maximum matching by augmenting paths with blossom contraction. Returns the
// mate of every vertex (-1 when exposed). Any order.
std::vector<Vertex> maximum_matching(const Graph& g);

// Edge independence number α′(G) with the lexicographically smallest maximum
// matching as witness.
Solved<std::vector<EdgeId>> edge_independence_number(const Graph& g);

// Total independence number α″(G). Branch and bound over matchings in edge
// order, each completed by a maximum independent set of the uncovered
// vertices; pruned by the per-edge-count ceiling min(n - e, α + e).
Solved<MixedSubset> total_independence_number(const Graph& g);

// Edge domination number γ′(G). Throws GraphError when the graph has no edges.
Solved<std::vector<EdgeId>> edge_domination_number(const Graph& g);

// Vertex arboricity β(G); witness[v] is the part index of vertex v.
Solved<std::vector<int>> vertex_arboricity(const Graph& g);

// Edge arboricity β′(G) = max over vertex sets S, |S| >= 2, of
// ceil(m_S / (|S| - 1)). Throws GraphError when the graph has no edges
// or has order above kMaxArboricityOrder.
inline constexpr int kMaxArboricityOrder = 24;
int edge_arboricity(const Graph& g);

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);
bool is_matching(const Graph& g, std::span<const EdgeId> edges);
bool is_edge_dominating_set(const Graph& g, std::span<const EdgeId> edges);
bool is_acyclic(const Graph& g);
bool is_acyclic_partition(const Graph& g, std::span<const int> part_of);

/// The six invariants of one connected graph plus its order and size.
/// gamma_prime and beta_prime are absent for the edgeless single vertex.
struct InvariantSet {
  int n = 0;
  int m = 0;
  int alpha = 0;
  int alpha_prime = 0;
  int alpha_double_prime = 0;
  std::optional<int> gamma_prime;
  int beta = 0;
  std::optional<int> beta_prime;

  std::vector<Vertex> independent_set;
  std::vector<EdgeId> matching;
  MixedSubset total_independent_set;
  std::vector<EdgeId> edge_dominating_set;
  std::vector<int> acyclic_partition;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// Throws GraphError for an empty or disconnected graph.
InvariantSet compute_all(const Graph& g);

}  // namespace totind
