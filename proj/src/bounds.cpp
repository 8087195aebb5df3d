#include "totind/bounds.hpp"

#include <algorithm>
#include <cstdlib>

#include "bits.hpp"
#include "totind/enumeration.hpp"

namespace totind {

bool is_check_id(std::string_view id) {
  return std::find(kAllChecks.begin(), kAllChecks.end(), id) != kAllChecks.end();
}

std::string_view to_string(Improvement c) {
  switch (c) {
    case Improvement::strictly_better:
      return "strictly_better";
    case Improvement::equal:
      return "equal";
    case Improvement::indeterminate_zero_case:
      return "indeterminate_zero_case";
  }
  return "unknown";
}

const CheckResult* BoundReport::find(std::string_view id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.holds; });
}

namespace {

void require_realizable(int n, int alpha, int alpha_prime) {
  if (alpha + 2 * alpha_prime < n) {
    throw GraphError("no connected graph has n=" + std::to_string(n) + ", alpha=" + std::to_string(alpha) +
                     ", alpha'=" + std::to_string(alpha_prime) + " (alpha + 2 alpha' < n)");
  }
}

int half_floor(int x) { return x >= 0 ? x / 2 : -((1 - x) / 2); }

CheckResult inapplicable(std::string_view id) {
  CheckResult c;
  c.id = std::string(id);
  c.applicable = false;
  return c;
}

CheckResult at_most(std::string_view id, long lhs, long rhs) {
  return {std::string(id), true, lhs, rhs, std::nullopt, lhs <= rhs, rhs - lhs};
}

CheckResult equals(std::string_view id, long lhs, long rhs) {
  return {std::string(id), true, lhs, rhs, std::nullopt, lhs == rhs, std::labs(lhs - rhs)};
}

CheckResult between(std::string_view id, long lower, long value, long upper) {
  return {std::string(id), true, value, upper, lower, lower <= value && value <= upper,
          std::min(value - lower, upper - value)};
}

}  // namespace

int m_prime(int n, int alpha, int alpha_prime) {
  require_realizable(n, alpha, alpha_prime);
  return half_floor(alpha - n + 2 * alpha_prime);
}

int main_theorem_bound(int n, int alpha, int alpha_prime) {
  return n + m_prime(n, alpha, alpha_prime) - alpha_prime;
}

Improvement improvement_classification(int n, int alpha, int alpha_prime) {
  require_realizable(n, alpha, alpha_prime);
  return alpha - n + 2 * alpha_prime > 0 ? Improvement::strictly_better : Improvement::indeterminate_zero_case;
}

EdgeCountRange edge_count_range(int k, int alpha, int n) {
  if (k < 1) throw GraphError("edge_count_range requires k >= 1, got " + std::to_string(k));
  return {k, std::max(k - alpha, 0), n - k};
}

std::vector<std::set<int>> edge_count_profile(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw GraphError("total independent set enumeration supports order <= " +
                     std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(g.order()));
  }
  const auto adj = adjacency_masks(g);
  const int n = g.order();
  const int m = g.size();
  std::vector<std::set<int>> profile(static_cast<std::size_t>(n + 1));

  // Elements 0..m-1 are edges, m..m+n-1 vertices. `blocked` holds vertices
  // that may no longer be used as an edge end or as a vertex element;
  // `shadow` holds vertices adjacent to a chosen vertex.
  auto walk = [&](auto&& self, int next, VertexMask blocked, VertexMask shadow, int edges, int size) -> void {
    profile[static_cast<std::size_t>(size)].insert(edges);
    for (int el = next; el < m + n; ++el) {
      if (el < m) {
        const auto [u, v] = g.edge(el);
        const VertexMask ends = bits::bit(u) | bits::bit(v);
        if (ends & blocked) continue;
        self(self, el + 1, blocked | ends, shadow, edges + 1, size + 1);
      } else {
        const Vertex v = el - m;
        if ((blocked | shadow) & bits::bit(v)) continue;
        self(self, el + 1, blocked | bits::bit(v), shadow | adj[static_cast<std::size_t>(v)], edges, size + 1);
      }
    }
  };
  walk(walk, 0, 0, 0, 0, 0);
  return profile;
}

std::set<int> observed_edge_counts(const Graph& g, int k) {
  const auto profile = edge_count_profile(g);
  if (k < 0 || k >= static_cast<int>(profile.size())) return {};
  return profile[static_cast<std::size_t>(k)];
}

CheckResult hamiltonian_edge_independence_check(const Graph& g, const InvariantSet& inv, bool hamiltonian) {
  if (!hamiltonian) return inapplicable(check::hamiltonian_matching);
  return equals(check::hamiltonian_matching, inv.alpha_prime, g.order() / 2);
}

CheckResult hamiltonian_edge_independence_check(const Graph& g) {
  if (!is_hamiltonian(g)) return inapplicable(check::hamiltonian_matching);
  InvariantSet inv;
  inv.alpha_prime = edge_independence_number(g).value;
  return hamiltonian_edge_independence_check(g, inv, true);
}

CheckResult hamiltonian_zero_gap_check(const Graph& g, const InvariantSet& inv, bool hamiltonian) {
  if (!hamiltonian) return inapplicable(check::zero_gap_characterization);
  const long twice_gap = inv.alpha - inv.n + 2L * inv.alpha_prime;
  const bool odd_complete = is_complete(g) && g.order() % 2 == 1;
  CheckResult c;
  c.id = std::string(check::zero_gap_characterization);
  c.lhs = twice_gap;
  c.rhs = 0;
  c.holds = (twice_gap == 0) == odd_complete;
  c.slack = twice_gap;
  return c;
}

CheckResult hamiltonian_zero_gap_check(const Graph& g) {
  if (!is_hamiltonian(g)) throw GraphError("hamiltonian_zero_gap_check requires a Hamiltonian graph");
  InvariantSet inv;
  inv.n = g.order();
  inv.alpha = independence_number(g).value;
  inv.alpha_prime = edge_independence_number(g).value;
  return hamiltonian_zero_gap_check(g, inv, true);
}

BoundReport verify_relations(const Graph& g, const InvariantSet& inv) {
  BoundReport report;
  report.graph_id = canonical_form(g).bytes;
  report.invariants = inv;
  report.hamiltonian = is_hamiltonian(g);

  const int n = inv.n;
  const int a = inv.alpha;
  const int a1 = inv.alpha_prime;
  const int a2 = inv.alpha_double_prime;
  const bool has_edges = inv.m > 0;
  auto& out = report.checks;

  if (has_edges) {
    out.push_back({std::string(check::alpha_lt_n), true, a, n, std::nullopt, a < n, n - a});
  } else {
    out.push_back(inapplicable(check::alpha_lt_n));
  }
  out.push_back(at_most(check::matching_half_n, a1, n / 2));
  out.push_back(hamiltonian_edge_independence_check(g, inv, report.hamiltonian));
  out.push_back(at_most(check::basic_upper, a2, a + a1));
  out.push_back(at_most(check::basic_lower, std::max(a, a1), a2));
  if (inv.gamma_prime) {
    out.push_back(equals(check::gamma_identity, *inv.gamma_prime + a2, n));
  } else {
    out.push_back(inapplicable(check::gamma_identity));
  }
  out.push_back(between(check::arboricity_sandwich_beta, 1 + n / 2, inv.beta + a2, n + 1));
  if (inv.beta_prime) {
    out.push_back(between(check::arboricity_sandwich_beta_prime, 1 + n / 2, *inv.beta_prime + a2, n + (n + 1) / 8));
  } else {
    out.push_back(inapplicable(check::arboricity_sandwich_beta_prime));
  }
  out.push_back(at_most(check::alpha_plus_2matching, n, a + 2L * a1));

  // Evaluated directly so an unrealizable triple (already flagged by
  // alpha_plus_2matching) still yields numbers.
  report.m_prime = half_floor(a - n + 2 * a1);
  const int bound = n + report.m_prime - a1;
  out.push_back(at_most(check::main_theorem, a2, bound));
  out.push_back(at_most(check::half_sum_bound, a2, (n + a) / 2));

  {
    const auto range = edge_count_range(a2, a, n);
    const int witness_edges = static_cast<int>(inv.total_independent_set.edges.size());
    auto c = between(check::edge_count_range, range.lo, witness_edges, range.hi);
    if (n <= kMaxEnumerationOrder) {
      const auto profile = edge_count_profile(g);
      for (int k = 1; k < static_cast<int>(profile.size()); ++k) {
        const auto allowed = edge_count_range(k, a, n);
        for (int e : profile[static_cast<std::size_t>(k)]) c.holds = c.holds && allowed.contains(e);
      }
    }
    out.push_back(c);
  }

  out.push_back(hamiltonian_zero_gap_check(g, inv, report.hamiltonian));

  {
    const auto basic = a + a1;
    const bool positive_gap = a - n + 2 * a1 > 0;
    auto c = at_most(check::improvement_class, bound, basic);
    c.holds = bound <= basic && (!positive_gap || bound < basic);
    out.push_back(c);
    report.improvement = bound < basic ? Improvement::strictly_better : Improvement::equal;
  }
  return report;
}

BoundReport verify_relations(const Graph& g) { return verify_relations(g, compute_all(g)); }

}  // namespace totind
