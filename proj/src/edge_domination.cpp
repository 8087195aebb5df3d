#include "bits.hpp"
#include "totind/solvers.hpp"

namespace totind {

namespace {

// An edge set D dominates exactly when the end vertices of D cover every
// edge. Iterative deepening on |D|; within one budget the include-first scan
// over edge ids finds the lexicographically smallest dominating set.
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : g_(g), m_(g.size()) {
    ends_.reserve(static_cast<std::size_t>(m_));
    for (const auto& [u, v] : g.edges()) ends_.push_back(bits::bit(u) | bits::bit(v));
    reach_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (EdgeId e = m_ - 1; e >= 0; --e) {
      reach_[static_cast<std::size_t>(e)] = reach_[static_cast<std::size_t>(e) + 1] | ends_[static_cast<std::size_t>(e)];
    }
  }

  Solved<std::vector<EdgeId>> run(int lower_bound) {
    for (budget_ = std::max(lower_bound, 1);; ++budget_) {
      chosen_.clear();
      if (search(0, 0)) return {budget_, chosen_};
    }
  }

 private:
  bool search(EdgeId next, VertexMask covered) {
    // Undominated edges, and a greedy matching among them: each further edge
    // of D can dominate at most two edges of that matching.
    int loose = 0;
    VertexMask used = 0;
    bool has_undominated = false;
    for (EdgeId f = 0; f < m_; ++f) {
      const VertexMask e = ends_[static_cast<std::size_t>(f)];
      if (e & covered) continue;
      has_undominated = true;
      if ((e & reach_[static_cast<std::size_t>(next)]) == 0) return false;
      if ((e & used) == 0) {
        used |= e;
        ++loose;
      }
    }
    if (!has_undominated) return true;
    const int left = budget_ - static_cast<int>(chosen_.size());
    if ((loose + 1) / 2 > left || next == m_) return false;

    chosen_.push_back(next);
    if (search(next + 1, covered | ends_[static_cast<std::size_t>(next)])) return true;
    chosen_.pop_back();
    return search(next + 1, covered);
  }

  const Graph& g_;
  int m_;
  std::vector<VertexMask> ends_;
  std::vector<VertexMask> reach_;
  int budget_ = 0;
  std::vector<EdgeId> chosen_;
};

}  // namespace

Solved<std::vector<EdgeId>> edge_domination_number(const Graph& g) {
  if (g.size() == 0) throw GraphError("edge_domination_number requires at least one edge");
  bits::require_mask_order(g, "edge_domination_number");
  return DominationSearch(g).run(1);
}

bool is_edge_dominating_set(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> in_set(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : edges) {
    if (!g.valid_edge(e)) return false;
    in_set[static_cast<std::size_t>(e)] = 1;
  }
  for (EdgeId f = 0; f < g.size(); ++f) {
    if (in_set[static_cast<std::size_t>(f)]) continue;
    bool dominated = false;
    for (EdgeId e : edges) {
      if (edges_adjacent(g, e, f)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace totind
