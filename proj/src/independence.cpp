#include "totind/solvers.hpp"

#include "bits.hpp"
#include "independence.hpp"

namespace totind {
namespace detail {

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(std::span<const VertexMask> adj) : adj_(adj) {}

  MaskSolution run(VertexMask candidates) {
    search(0, 0, candidates);
    return best_;
  }

 private:
  // Greedy cover of the candidates by cliques; each clique holds at most one
  // vertex of an independent set.
  int clique_cover(VertexMask rest) const {
    int cliques = 0;
    while (rest != 0) {
      const Vertex v = bits::lowest(rest);
      rest &= ~bits::bit(v);
      VertexMask extend = rest & adj_[static_cast<std::size_t>(v)];
      while (extend != 0) {
        const Vertex w = bits::lowest(extend);
        rest &= ~bits::bit(w);
        extend &= adj_[static_cast<std::size_t>(w)];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexMask chosen, int count, VertexMask candidates) {
    if (candidates == 0) {
      if (count > best_.size || !found_) {
        best_ = {count, chosen};
        found_ = true;
      }
      return;
    }
    if (found_ && count + clique_cover(candidates) <= best_.size) return;
    const Vertex v = bits::lowest(candidates);
    const VertexMask rest = candidates & ~bits::bit(v);
    search(chosen | bits::bit(v), count + 1, rest & ~adj_[static_cast<std::size_t>(v)]);
    search(chosen, count, rest);
  }

  std::span<const VertexMask> adj_;
  MaskSolution best_;
  bool found_ = false;
};

}  // namespace

MaskSolution max_independent_within(std::span<const VertexMask> adj, VertexMask candidates) {
  return IndependentSetSearch(adj).run(candidates);
}

}  // namespace detail

Solved<std::vector<Vertex>> independence_number(const Graph& g) {
  if (g.order() < 1) throw GraphError("independence_number requires order >= 1");
  const auto adj = adjacency_masks(g);
  const auto best = detail::max_independent_within(adj, bits::all(g.order()));
  Solved<std::vector<Vertex>> out;
  out.value = best.size;
  bits::for_each(best.set, [&](Vertex v) { out.witness.push_back(v); });
  return out;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    if (!g.valid_vertex(v)) return false;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || vertices_adjacent(g, vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace totind
