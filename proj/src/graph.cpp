#include "totind/graph.hpp"

#include <algorithm>
#include <sstream>

#include "bits.hpp"

namespace totind {

Graph Graph::from_edges(int n, std::span<const Edge> pairs) {
  if (n < 0) {
    throw GraphError("vertex count must be non-negative, got " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.edges_.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream msg;
      msg << "pair " << i << " (" << u << "," << v << ") has a vertex outside 0.." << n - 1;
      throw GraphError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "pair " << i << " is a self-loop at vertex " << u;
      throw GraphError(msg.str());
    }
    g.edges_.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  const auto nn = static_cast<std::size_t>(n);
  g.adjacency_.assign(nn, {});
  g.bits_.assign(nn * static_cast<std::size_t>(g.words_), 0);
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    g.bits_[static_cast<std::size_t>(u * g.words_ + v / 64)] |= std::uint64_t{1} << (v % 64);
    g.bits_[static_cast<std::size_t>(v * g.words_ + u / 64)] |= std::uint64_t{1} << (u % 64);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

VertexMask Graph::neighbor_mask(Vertex v) const {
  bits::require_mask_order(*this, "neighbor_mask");
  return n_ == 0 ? 0 : bits_.at(static_cast<std::size_t>(v));
}

Graph from_edge_list(int n, std::span<const Edge> pairs) { return Graph::from_edges(n, pairs); }

Graph from_edge_list(int n, std::initializer_list<Edge> pairs) {
  return Graph::from_edges(n, std::span<const Edge>(pairs.begin(), pairs.size()));
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) {
    throw GraphError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
  }
}

void require_edge(const Graph& g, EdgeId e) {
  if (!g.valid_edge(e)) {
    throw GraphError("edge id " + std::to_string(e) + " not in graph of size " + std::to_string(g.size()));
  }
}

}  // namespace

bool vertices_adjacent(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw GraphError("vertex adjacency is undefined for a vertex with itself");
  return g.has_edge(u, v);
}

bool edges_adjacent(const Graph& g, EdgeId e, EdgeId f) {
  require_edge(g, e);
  require_edge(g, f);
  if (e == f) throw GraphError("edge adjacency requires two distinct edges");
  const auto& a = g.edge(e);
  const auto& b = g.edge(f);
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool vertex_edge_adjacent(const Graph& g, Vertex v, EdgeId e) {
  require_vertex(g, v);
  require_edge(g, e);
  const auto& a = g.edge(e);
  return a.u == v || a.v == v;
}

void validate_subset(const Graph& g, const MixedSubset& s) {
  auto vs = s.vertices;
  auto es = s.edges;
  for (auto v : vs) require_vertex(g, v);
  for (auto e : es) require_edge(g, e);
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw GraphError("mixed subset repeats a vertex");
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) throw GraphError("mixed subset repeats an edge");
}

bool is_total_independent(const Graph& g, const MixedSubset& s) {
  validate_subset(g, s);
  const auto& vs = s.vertices;
  const auto& es = s.edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vertices_adjacent(g, vs[i], vs[j])) return false;
    }
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (edges_adjacent(g, es[i], es[j])) return false;
    }
  }
  for (auto v : vs) {
    for (auto e : es) {
      if (vertex_edge_adjacent(g, v, e)) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require_vertex(g, keep[i]);
    auto& slot = relabel[static_cast<std::size_t>(keep[i])];
    if (slot != -1) throw GraphError("induced_subgraph: vertex " + std::to_string(keep[i]) + " listed twice");
    slot = static_cast<int>(i);
  }
  std::vector<Edge> inner;
  for (const auto& [u, v] : g.edges()) {
    const int a = relabel[static_cast<std::size_t>(u)];
    const int b = relabel[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) inner.push_back({a, b});
  }
  return Graph::from_edges(static_cast<int>(keep.size()), inner);
}

bool is_connected(const Graph& g) {
  if (g.order() < 1) throw GraphError("is_connected requires order >= 1");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

bool is_discrete(const Graph& g) noexcept { return g.size() == 0; }

bool is_complete(const Graph& g) noexcept {
  const long n = g.order();
  if (g.size() != n * (n - 1) / 2) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != n - 1) return false;
  }
  return true;
}

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  bits::require_mask_order(g, "adjacency_masks");
  std::vector<VertexMask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= bits::bit(v);
    adj[static_cast<std::size_t>(v)] |= bits::bit(u);
  }
  return adj;
}

namespace {

// Extends a path rooted at vertex 0. Every unvisited vertex must keep at least
// two usable neighbours (unvisited ones, the current end, or the root).
class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g) : n_(g.order()), adj_(adjacency_masks(g)) {}

  bool run() {
    for (auto m : adj_) {
      if (bits::count(m) < 2) return false;
    }
    return extend(0, bits::bit(0), 1);
  }

 private:
  bool extend(Vertex end, VertexMask visited, int length) {
    if (length == n_) return (adj_[static_cast<std::size_t>(end)] & bits::bit(0)) != 0;
    const VertexMask unvisited = bits::all(n_) & ~visited;
    const VertexMask usable = unvisited | bits::bit(end) | bits::bit(0);
    bool dead = false;
    bits::for_each(unvisited, [&](Vertex w) {
      if (bits::count(adj_[static_cast<std::size_t>(w)] & usable) < 2) dead = true;
    });
    if (dead) return false;
    VertexMask next = adj_[static_cast<std::size_t>(end)] & unvisited;
    while (next != 0) {
      const Vertex w = bits::lowest(next);
      next &= next - 1;
      if (extend(w, visited | bits::bit(w), length + 1)) return true;
    }
    return false;
  }

  int n_;
  std::vector<VertexMask> adj_;
};

}  // namespace

bool is_hamiltonian(const Graph& g) {
  if (g.order() < 3) return false;
  return HamiltonSearch(g).run();
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace totind
