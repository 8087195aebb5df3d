#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totind/bounds.hpp"
#include "totind/graph.hpp"

namespace totind {

/// Isomorphism-invariant graph6 encoding.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCanonicalOrder = 10;

/// Smallest graph6 string over all labelings that respect the equitable
/// refinement of the degree partition. Individualization branches skip
/// vertices that are twins of an earlier branch. Throws GraphError for
/// order above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
/// canonical_form(g) decoded back to a graph.
Graph canonical_graph(const Graph& g);

/// Default enumeration ceiling; 9 is reachable with allow_large.
inline constexpr int kDefaultCeiling = 8;

struct EnumerationLimits {
  int ceiling = kDefaultCeiling;
};

/// One representative per isomorphism class of connected graphs of order n,
/// canonically labeled and sorted by canonical form. Classes of order n are
/// grown from those of order n - 1 by attaching a new vertex, since every
/// connected graph has a vertex whose removal leaves it connected.
/// Throws GraphError when n is outside 1..limits.ceiling.
std::vector<Graph> enumerate_connected(int n, EnumerationLimits limits = {});

/// Streaming variant of enumerate_connected; same order.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit, EnumerationLimits limits = {});

struct Violation {
  std::string graph;  // canonical graph6
  std::string check_id;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct SweepReport {
  int n = 0;
  long class_count = 0;
  std::vector<Violation> violations;
  long sharp_count = 0;
  std::map<long, long> gap_histogram;  // main-theorem slack -> count
  std::map<std::string, long> improvement_histogram;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

struct SweepOptions {
  int workers = 1;
  std::vector<std::string> checks;  // empty: every check
  EnumerationLimits limits;
};

/// One report per order 1..n_max. Results are merged in canonical-form order,
/// so the reports do not depend on the worker count. A solver exception
/// is rethrown as GraphError naming the offending graph.
std::vector<SweepReport> sweep(int n_max, const SweepOptions& options = {});
SweepReport sweep_order(int n, const SweepOptions& options = {});

/// Whether the main-theorem bound is attained by g.
bool is_sharp(const Graph& g);

/// First connected graph of order n (canonical order) with maximum degree
/// exactly d attaining the main-theorem bound.
std::optional<Graph> sharpness_by_degree(int n, int d, EnumerationLimits limits = {});
/// Every such graph.
std::vector<Graph> sharp_graphs_by_degree(int n, int d, EnumerationLimits limits = {});

}  // namespace totind
