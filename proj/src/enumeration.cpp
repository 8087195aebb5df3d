#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "bits.hpp"
#include "totind/enumeration.hpp"
#include "totind/io.hpp"

namespace totind {

namespace {

void require_order(int n, const EnumerationLimits& limits) {
  const int ceiling = std::min(limits.ceiling, kMaxCanonicalOrder);
  if (n < 1 || n > ceiling) {
    throw GraphError("enumeration order must be within 1.." + std::to_string(ceiling) + ", got " + std::to_string(n));
  }
}

// Canonical graph6 strings of every connected class, per order.
std::vector<std::string> connected_classes(int n) {
  static std::mutex lock;
  static std::vector<std::vector<std::string>> levels;

  {
    std::lock_guard guard(lock);
    if (static_cast<int>(levels.size()) > n && !levels[static_cast<std::size_t>(n)].empty()) {
      return levels[static_cast<std::size_t>(n)];
    }
  }

  std::vector<std::string> result;
  if (n == 1) {
    result.push_back(canonical_form(from_edge_list(1, {})).bytes);
  } else {
    std::set<std::string> seen;
    for (const auto& code : connected_classes(n - 1)) {
      const Graph base = parse_graph6(code);
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      const std::size_t kept = edges.size();
      const Vertex fresh = n - 1;
      for (VertexMask attach = 1; attach < (VertexMask{1} << (n - 1)); ++attach) {
        edges.resize(kept);
        bits::for_each(attach, [&](Vertex v) { edges.push_back({v, fresh}); });
        seen.insert(canonical_form(from_edge_list(n, edges)).bytes);
      }
    }
    result.assign(seen.begin(), seen.end());
  }

  std::lock_guard guard(lock);
  if (static_cast<int>(levels.size()) <= n) levels.resize(static_cast<std::size_t>(n) + 1);
  levels[static_cast<std::size_t>(n)] = result;
  return result;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, EnumerationLimits limits) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); }, limits);
  return out;
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit, EnumerationLimits limits) {
  require_order(n, limits);
  for (const auto& code : connected_classes(n)) visit(parse_graph6(code));
}

bool is_sharp(const Graph& g) {
  const auto inv = compute_all(g);
  return inv.alpha_double_prime == main_theorem_bound(inv.n, inv.alpha, inv.alpha_prime);
}

SweepReport sweep_order(int n, const SweepOptions& options) {
  for (const auto& id : options.checks) {
    if (!is_check_id(id)) throw GraphError("unknown check id '" + id + "'");
  }
  const auto graphs = enumerate_connected(n, options.limits);
  const std::size_t count = graphs.size();

  std::vector<BoundReport> reports(count);
  std::vector<std::string> failures(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reports[i] = verify_relations(graphs[i]);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  auto selected = [&](const std::string& id) {
    return options.checks.empty() || std::find(options.checks.begin(), options.checks.end(), id) != options.checks.end();
  };

  SweepReport report;
  report.n = n;
  report.class_count = static_cast<long>(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!failures[i].empty()) {
      throw GraphError("solver failure on " + emit_graph6(graphs[i]) + ": " + failures[i]);
    }
    const auto& r = reports[i];
    for (const auto& c : r.checks) {
      if (!c.holds && selected(c.id)) report.violations.push_back({r.graph_id, c.id});
    }
    const auto* theorem = r.find(check::main_theorem);
    if (theorem->slack == 0) ++report.sharp_count;
    ++report.gap_histogram[theorem->slack];
    ++report.improvement_histogram[std::string(to_string(r.improvement))];
  }
  return report;
}

std::vector<SweepReport> sweep(int n_max, const SweepOptions& options) {
  require_order(n_max, options.limits);
  std::vector<SweepReport> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(sweep_order(n, options));
  return out;
}

std::vector<Graph> sharp_graphs_by_degree(int n, int d, EnumerationLimits limits) {
  if (d < 1 || d >= n) throw GraphError("degree must satisfy 1 <= d < n");
  std::vector<Graph> out;
  for_each_connected(
      n,
      [&](const Graph& g) {
        if (g.max_degree() == d && is_sharp(g)) out.push_back(g);
      },
      limits);
  return out;
}

std::optional<Graph> sharpness_by_degree(int n, int d, EnumerationLimits limits) {
  if (d < 1 || d >= n) throw GraphError("degree must satisfy 1 <= d < n");
  std::optional<Graph> found;
  for (const auto& g : enumerate_connected(n, limits)) {
    if (g.max_degree() == d && is_sharp(g)) {
      found = g;
      break;
    }
  }
  return found;
}

}  // namespace totind
