#include <algorithm>

#include "bits.hpp"
#include "independence.hpp"
#include "totind/solvers.hpp"

namespace totind {

namespace {

// A total independent set is a matching X_e plus an independent set X_v that
// avoids every end vertex of X_e. Matchings are enumerated in edge order
// (include first) and each is completed by the lexicographically smallest
// maximum independent set of the still uncovered vertices.
class TotalSearch {
 public:
  TotalSearch(const Graph& g, int alpha, int alpha_prime)
      : g_(g), adj_(adjacency_masks(g)), n_(g.order()), alpha_(alpha), alpha_prime_(alpha_prime) {}

  Solved<MixedSubset> run() {
    search(0, bits::all(n_));
    Solved<MixedSubset> out;
    out.value = best_size_;
    out.witness.edges = best_edges_;
    bits::for_each(best_vertices_, [&](Vertex v) { out.witness.vertices.push_back(v); });
    return out;
  }

 private:
  // With e edges in the final set, |X| <= min(n - e, α + e). Maximise over
  // the edge counts still reachable from this node.
  int ceiling(int edges_now, VertexMask free) const {
    const int most_edges = std::min(alpha_prime_, edges_now + bits::count(free) / 2);
    int best = 0;
    for (int e = edges_now; e <= most_edges; ++e) {
      best = std::max(best, std::min(n_ - e, alpha_ + e));
    }
    return best;
  }

  void search(EdgeId next, VertexMask free) {
    const int edges_now = static_cast<int>(chosen_.size());
    if (found_ && ceiling(edges_now, free) <= best_size_) return;
    if (next == g_.size()) {
      const auto completion = detail::max_independent_within(adj_, free);
      const int total = edges_now + completion.size;
      if (!found_ || total > best_size_) {
        found_ = true;
        best_size_ = total;
        best_edges_ = chosen_;
        best_vertices_ = completion.set;
      }
      return;
    }
    const auto [u, v] = g_.edge(next);
    const VertexMask ends = bits::bit(u) | bits::bit(v);
    if ((free & ends) == ends) {
      chosen_.push_back(next);
      search(next + 1, free & ~ends);
      chosen_.pop_back();
    }
    search(next + 1, free);
  }

  const Graph& g_;
  std::vector<VertexMask> adj_;
  int n_;
  int alpha_;
  int alpha_prime_;

  std::vector<EdgeId> chosen_;
  bool found_ = false;
  int best_size_ = 0;
  std::vector<EdgeId> best_edges_;
  VertexMask best_vertices_ = 0;
};

}  // namespace

Solved<MixedSubset> total_independence_number(const Graph& g) {
  if (g.order() < 1) throw GraphError("total_independence_number requires order >= 1");
  const int alpha = independence_number(g).value;
  int matched = 0;
  for (Vertex mate : maximum_matching(g)) matched += (mate != -1);
  const int alpha_prime = matched / 2;
  return TotalSearch(g, alpha, alpha_prime).run();
}

}  // namespace totind
