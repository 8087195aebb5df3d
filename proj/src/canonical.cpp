#include <algorithm>

#include "bits.hpp"
#include "totind/enumeration.hpp"
#include "totind/io.hpp"

namespace totind {

namespace {

using Cells = std::vector<VertexMask>;

// Splits every cell by the number of neighbours each vertex has in every
// cell, until the ordered partition is equitable. Sub-cells are ordered by
// their count vectors, which keeps the result labeling-invariant.
Cells refine(std::span<const VertexMask> adj, Cells cells) {
  while (true) {
    Cells next;
    next.reserve(adj.size());
    for (const VertexMask cell : cells) {
      if (bits::count(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      bits::for_each(cell, [&](Vertex v) {
        std::vector<int> counts;
        counts.reserve(cells.size());
        for (const VertexMask other : cells) counts.push_back(bits::count(adj[static_cast<std::size_t>(v)] & other));
        keyed.emplace_back(std::move(counts), v);
      });
      std::sort(keyed.begin(), keyed.end());
      VertexMask group = 0;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) {
          next.push_back(group);
          group = 0;
        }
        group |= bits::bit(keyed[i].second);
      }
      next.push_back(group);
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), adj_(adjacency_masks(g)) {}

  std::string run() {
    if (g_.order() == 0) return emit_graph6(g_);
    search(refine(adj_, Cells{bits::all(g_.order())}));
    return best_;
  }

 private:
  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexMask c) { return bits::count(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    bits::for_each(*target, [&](Vertex v) {
      // A twin of an explored vertex spans an isomorphic subtree.
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
        return (adj_[static_cast<std::size_t>(u)] & ~bits::bit(v)) == (adj_[static_cast<std::size_t>(v)] & ~bits::bit(u));
      });
      if (twin) return;
      tried.push_back(v);
      Cells split;
      split.reserve(cells.size() + 1);
      split.insert(split.end(), cells.begin(), cells.begin() + static_cast<long>(index));
      split.push_back(bits::bit(v));
      split.push_back(*target & ~bits::bit(v));
      split.insert(split.end(), cells.begin() + static_cast<long>(index) + 1, cells.end());
      search(refine(adj_, std::move(split)));
    });
  }

  void leaf(const Cells& cells) {
    std::vector<int> label(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) label[static_cast<std::size_t>(bits::lowest(cells[i]))] = static_cast<int>(i);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g_.size()));
    for (const auto& [u, v] : g_.edges()) edges.push_back({label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]});
    auto candidate = emit_graph6(from_edge_list(g_.order(), edges));
    if (best_.empty() || candidate < best_) best_ = std::move(candidate);
  }

  const Graph& g_;
  std::vector<VertexMask> adj_;
  std::string best_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical_form supports order <= " + std::to_string(kMaxCanonicalOrder) + ", got " +
                     std::to_string(g.order()));
  }
  return {Canonizer(g).run()};
}

Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g).bytes); }

}  // namespace totind
