#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "totind/graph.hpp"
#include "totind/solvers.hpp"

namespace totind {

/// Stable check identifiers used in every report format.
namespace check {
inline constexpr std::string_view alpha_lt_n = "alpha_lt_n";
inline constexpr std::string_view matching_half_n = "matching_half_n";
inline constexpr std::string_view hamiltonian_matching = "hamiltonian_matching";
inline constexpr std::string_view basic_upper = "basic_upper";
inline constexpr std::string_view basic_lower = "basic_lower";
inline constexpr std::string_view gamma_identity = "gamma_identity";
inline constexpr std::string_view arboricity_sandwich_beta = "arboricity_sandwich_beta";
inline constexpr std::string_view arboricity_sandwich_beta_prime = "arboricity_sandwich_beta_prime";
inline constexpr std::string_view alpha_plus_2matching = "alpha_plus_2matching";
inline constexpr std::string_view main_theorem = "main_theorem";
inline constexpr std::string_view half_sum_bound = "half_sum_bound";
inline constexpr std::string_view edge_count_range = "edge_count_range";
inline constexpr std::string_view zero_gap_characterization = "zero_gap_characterization";
inline constexpr std::string_view improvement_class = "improvement_class";
}  // namespace check

inline constexpr std::array<std::string_view, 14> kAllChecks = {
    check::alpha_lt_n,
    check::matching_half_n,
    check::hamiltonian_matching,
    check::basic_upper,
    check::basic_lower,
    check::gamma_identity,
    check::arboricity_sandwich_beta,
    check::arboricity_sandwich_beta_prime,
    check::alpha_plus_2matching,
    check::main_theorem,
    check::half_sum_bound,
    check::edge_count_range,
    check::zero_gap_characterization,
    check::improvement_class,
};

bool is_check_id(std::string_view id);

/// One evaluated relation. Inequalities read `lower <= lhs <= rhs` (or
/// `lhs < rhs` for alpha_lt_n); identities read `lhs == rhs`.
/// `slack` is rhs - lhs for one-sided inequalities, the distance to the
/// nearer end for two-sided ones and |lhs - rhs| for identities.
/// Inapplicable checks (hypothesis not met) always hold.
struct CheckResult {
  std::string id;
  bool applicable = true;
  long lhs = 0;
  long rhs = 0;
  std::optional<long> lower;
  bool holds = true;
  long slack = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

enum class Improvement { strictly_better, equal, indeterminate_zero_case };
std::string_view to_string(Improvement c);

struct EdgeCountRange {
  int k = 0;
  int lo = 0;
  int hi = 0;

  bool contains(int e) const noexcept { return lo <= e && e <= hi; }
  friend bool operator==(const EdgeCountRange&, const EdgeCountRange&) = default;
};

struct BoundReport {
  std::string graph_id;  // canonical graph6 string
  InvariantSet invariants;
  int m_prime = 0;
  bool hamiltonian = false;
  std::vector<CheckResult> checks;
  Improvement improvement = Improvement::equal;  // never indeterminate here

  const CheckResult* find(std::string_view id) const;
  bool all_hold() const;
};

/// n + floor((α - n + 2α′)/2) - α′. Throws GraphError when α + 2α′ < n.
int main_theorem_bound(int n, int alpha, int alpha_prime);

/// floor((α - n + 2α′)/2). Throws GraphError when α + 2α′ < n.
int m_prime(int n, int alpha, int alpha_prime);

/// Sign of (α - n + 2α′)/2: positive means strictly better than α + α′;
/// zero is indeterminate and callers compare the bounds numerically.
Improvement improvement_classification(int n, int alpha, int alpha_prime);

/// Allowed edge counts in a total independent set of size k, lower end
/// clamped at 0. Throws GraphError for k < 1.
EdgeCountRange edge_count_range(int k, int alpha, int n);

/// Largest order for which total independent sets are enumerated outright.
inline constexpr int kMaxEnumerationOrder = 8;

/// Distinct edge counts |X_e| over all total independent sets of size k.
/// Throws GraphError when the order exceeds kMaxEnumerationOrder.
std::set<int> observed_edge_counts(const Graph& g, int k);

/// For every size k, the set of edge counts realised by total independent
/// sets of that size (index k; index 0 holds the empty set).
std::vector<std::set<int>> edge_count_profile(const Graph& g);

/// Hamiltonian graphs have α′ = floor(n/2); inapplicable otherwise.
CheckResult hamiltonian_edge_independence_check(const Graph& g);
CheckResult hamiltonian_edge_independence_check(const Graph& g, const InvariantSet& inv, bool hamiltonian);

/// For Hamiltonian g: α - n + 2α′ = 0 exactly when g is K_n with n odd.
/// Throws GraphError when g is not Hamiltonian.
CheckResult hamiltonian_zero_gap_check(const Graph& g);
CheckResult hamiltonian_zero_gap_check(const Graph& g, const InvariantSet& inv, bool hamiltonian);

/// Evaluates every relation in kAllChecks. `inv` must be compute_all(g).
/// Violations are recorded in the report, never thrown.
BoundReport verify_relations(const Graph& g, const InvariantSet& inv);
BoundReport verify_relations(const Graph& g);

}  // namespace totind
