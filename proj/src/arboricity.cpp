#include <numeric>

#include "bits.hpp"
#include "totind/solvers.hpp"

namespace totind {

namespace {

// Adding v to the part keeps it a forest iff no two neighbours of v in the
// part lie in the same component of the part.
bool stays_acyclic(std::span<const VertexMask> adj, VertexMask part, Vertex v) {
  VertexMask pending = adj[static_cast<std::size_t>(v)] & part;
  while (pending != 0) {
    const Vertex start = bits::lowest(pending);
    VertexMask component = bits::bit(start);
    VertexMask frontier = component;
    while (frontier != 0) {
      const Vertex w = bits::lowest(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = adj[static_cast<std::size_t>(w)] & part & ~component;
      component |= fresh;
      frontier |= fresh;
    }
    if (bits::count(component & pending) > 1) return false;
    pending &= ~component;
  }
  return true;
}

class AcyclicPartitionSearch {
 public:
  explicit AcyclicPartitionSearch(const Graph& g) : n_(g.order()), adj_(adjacency_masks(g)) {}

  Solved<std::vector<int>> run() {
    for (parts_ = 1;; ++parts_) {
      masks_.assign(static_cast<std::size_t>(parts_), 0);
      assignment_.assign(static_cast<std::size_t>(n_), -1);
      if (assign(0, 0)) return {parts_, assignment_};
    }
  }

 private:
  // Parts are opened in order, so the first success is the lexicographically
  // smallest restricted-growth assignment.
  bool assign(Vertex v, int opened) {
    if (v == n_) return true;
    const int limit = std::min(parts_, opened + 1);
    for (int p = 0; p < limit; ++p) {
      auto& part = masks_[static_cast<std::size_t>(p)];
      if (!stays_acyclic(adj_, part, v)) continue;
      part |= bits::bit(v);
      assignment_[static_cast<std::size_t>(v)] = p;
      if (assign(v + 1, std::max(opened, p + 1))) return true;
      part &= ~bits::bit(v);
    }
    assignment_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  int n_;
  std::vector<VertexMask> adj_;
  int parts_ = 0;
  std::vector<VertexMask> masks_;
  std::vector<int> assignment_;
};

}  // namespace

Solved<std::vector<int>> vertex_arboricity(const Graph& g) {
  if (g.order() < 1) throw GraphError("vertex_arboricity requires order >= 1");
  return AcyclicPartitionSearch(g).run();
}

int edge_arboricity(const Graph& g) {
  if (g.size() == 0) throw GraphError("edge_arboricity requires at least one edge");
  if (g.order() > kMaxArboricityOrder) {
    throw GraphError("edge_arboricity supports order <= " + std::to_string(kMaxArboricityOrder) + ", got " +
                     std::to_string(g.order()));
  }
  const auto adj = adjacency_masks(g);
  const VertexMask subsets = VertexMask{1} << g.order();
  int best = 0;
  for (VertexMask s = 1; s < subsets; ++s) {
    const int order = bits::count(s);
    if (order < 2) continue;
    int degree_sum = 0;
    bits::for_each(s, [&](Vertex v) { degree_sum += bits::count(adj[static_cast<std::size_t>(v)] & s); });
    const int size = degree_sum / 2;
    best = std::max(best, (size + order - 2) / (order - 1));
  }
  return best;
}

bool is_acyclic(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (const auto& [u, v] : g.edges()) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool is_acyclic_partition(const Graph& g, std::span<const int> part_of) {
  if (static_cast<int>(part_of.size()) != g.order()) return false;
  int parts = 0;
  for (int p : part_of) {
    if (p < 0) return false;
    parts = std::max(parts, p + 1);
  }
  for (int p = 0; p < parts; ++p) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (part_of[static_cast<std::size_t>(v)] == p) members.push_back(v);
    }
    if (!is_acyclic(induced_subgraph(g, members))) return false;
  }
  return true;
}

}  // namespace totind
