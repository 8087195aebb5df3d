#include <deque>

#include "totind/solvers.hpp"

namespace totind {

namespace {

// Edmonds' augmenting-path search with blossom contraction, restricted to the
// vertices flagged in `alive`.
class Blossom {
 public:
  Blossom(const Graph& g, const std::vector<char>& alive)
      : g_(g),
        alive_(alive),
        n_(static_cast<std::size_t>(g.order())),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, 0),
        in_blossom_(n_, 0) {}

  std::vector<Vertex> solve() {
    // Greedy start in edge order.
    for (const auto& [u, v] : g_.edges()) {
      if (is_alive(u) && is_alive(v) && at(mate_, u) == -1 && at(mate_, v) == -1) {
        at(mate_, u) = v;
        at(mate_, v) = u;
      }
    }
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (!is_alive(root) || at(mate_, root) != -1) continue;
      Vertex v = find_augmenting_path(root);
      while (v != -1) {
        const Vertex pv = at(parent_, v);
        const Vertex next = at(mate_, pv);
        at(mate_, v) = pv;
        at(mate_, pv) = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  template <class T>
  static T& at(std::vector<T>& xs, Vertex v) {
    return xs[static_cast<std::size_t>(v)];
  }
  bool is_alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = at(base_, a);
      at(seen, a) = 1;
      if (at(mate_, a) == -1) break;
      a = at(parent_, at(mate_, a));
    }
    while (true) {
      b = at(base_, b);
      if (at(seen, b)) return b;
      b = at(parent_, at(mate_, b));
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (at(base_, v) != b) {
      at(in_blossom_, at(base_, v)) = 1;
      at(in_blossom_, at(base_, at(mate_, v))) = 1;
      at(parent_, v) = child;
      child = at(mate_, v);
      v = at(parent_, at(mate_, v));
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    at(used_, root) = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (!is_alive(to)) continue;
        if (at(base_, v) == at(base_, to) || at(mate_, v) == to) continue;
        if (to == root || (at(mate_, to) != -1 && at(parent_, at(mate_, to)) != -1)) {
          const Vertex current = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[static_cast<std::size_t>(base_[i])]) {
              base_[i] = current;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
          }
        } else if (at(parent_, to) == -1) {
          at(parent_, to) = v;
          if (at(mate_, to) == -1) return to;
          const Vertex next = at(mate_, to);
          at(used_, next) = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  const std::vector<char>& alive_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

int matching_size(const Graph& g, const std::vector<char>& alive) {
  const auto mate = Blossom(g, alive).solve();
  int matched = 0;
  for (Vertex m : mate) matched += (m != -1);
  return matched / 2;
}

}  // namespace

std::vector<Vertex> maximum_matching(const Graph& g) {
  const std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  return Blossom(g, alive).solve();
}

Solved<std::vector<EdgeId>> edge_independence_number(const Graph& g) {
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  const int target = matching_size(g, alive);

  // Fix edges greedily in id order whenever the rest of the graph still
  // admits a matching of the remaining size.
  Solved<std::vector<EdgeId>> out{target, {}};
  int remaining = target;
  for (EdgeId e = 0; e < g.size() && remaining > 0; ++e) {
    const auto [u, v] = g.edge(e);
    auto& au = alive[static_cast<std::size_t>(u)];
    auto& av = alive[static_cast<std::size_t>(v)];
    if (!au || !av) continue;
    au = av = 0;
    if (matching_size(g, alive) == remaining - 1) {
      out.witness.push_back(e);
      --remaining;
    } else {
      au = av = 1;
    }
  }
  return out;
}

bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    if (!g.valid_edge(e)) return false;
    const auto [u, v] = g.edge(e);
    auto& cu = covered[static_cast<std::size_t>(u)];
    auto& cv = covered[static_cast<std::size_t>(v)];
    if (cu || cv) return false;
    cu = cv = 1;
  }
  return true;
}

}  // namespace totind
