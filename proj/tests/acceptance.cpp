// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "totind/bounds.hpp"
#include "totind/enumeration.hpp"
#include "totind/generators.hpp"
#include "totind/io.hpp"
#include "totind/report.hpp"

using namespace totind;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Expect {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass_ = false;
    if (failures_++ < 5) detail_ << (detail_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string& text) { notes_ << (notes_.tellp() > 0 ? "; " : "") << text; }
  Outcome outcome() const {
    std::string d = pass_ ? notes_.str() : detail_.str();
    if (!pass_ && failures_ > 5) d += "; ... " + std::to_string(failures_) + " failures total";
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::ostringstream detail_;
  std::ostringstream notes_;
};

std::string str(long v) { return std::to_string(v); }

Outcome paper_values() {
  Expect e;
  const auto k23 = verify_relations(complete_bipartite(2, 3));
  const auto& a = k23.invariants;
  e.check(a.alpha == 3 && a.alpha_prime == 2 && a.alpha_double_prime == 3, "K2,3 invariants");
  e.check(k23.find(check::main_theorem)->rhs == 4, "K2,3 bound " + str(k23.find(check::main_theorem)->rhs));

  const auto star = compute_all(paper_figure(Figure::alpha_figure));
  e.check(star.alpha == 3 && star.alpha_prime == 1 && star.alpha_double_prime == 3, "star invariants");
  e.check(star.gamma_prime == 1 && star.n - *star.gamma_prime == 3, "star gamma'");

  const auto k3 = verify_relations(complete(3));
  e.check(k3.invariants.alpha == 1 && k3.invariants.alpha_prime == 1, "K3 invariants");
  e.check(k3.invariants.alpha + k3.invariants.alpha_prime == 2, "K3 alpha + alpha'");
  e.check(k3.invariants.n - k3.invariants.alpha_prime == 2, "K3 n - alpha'");
  e.check(k3.find(check::main_theorem)->rhs == 2, "K3 bound");
  return e.outcome();
}

Outcome complete_graph_sharpness() {
  Expect e;
  for (int n = 2; n <= 9; ++n) {
    const auto r = verify_relations(complete(n));
    const int expected = n % 2 ? (n - 1) / 2 + 1 : n / 2;
    e.check(r.invariants.alpha_double_prime == expected, "K" + str(n) + " alpha''=" + str(r.invariants.alpha_double_prime));
    e.check(r.find(check::main_theorem)->slack == 0, "K" + str(n) + " slack");
  }
  return e.outcome();
}

Outcome exhaustive_sweep() {
  Expect e;
  std::map<std::string, long> by_check;
  std::map<int, long> by_order;
  std::string first;
  for (const auto& r : sweep(kDefaultCeiling)) {
    for (const auto& v : r.violations) {
      ++by_check[v.check_id];
      ++by_order[r.n];
      if (first.empty()) first = v.graph;
    }
  }
  for (const auto id : kAllChecks) {
    const auto it = by_check.find(std::string(id));
    const long count = it == by_check.end() ? 0 : it->second;
    e.check(count == 0, std::string(id) + ": " + str(count) + " violating classes");
  }
  if (!by_order.empty()) {
    std::string orders;
    for (const auto& [n, c] : by_order) orders += (orders.empty() ? "" : ",") + ("n=" + str(n) + ":" + str(c));
    e.check(false, "by order " + orders + "; first " + first);
  }
  return e.outcome();
}

Outcome oracle_equivalence() {
  Expect e;
  long graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      ++graphs;
      const auto inv = compute_all(g);
      const auto id = emit_graph6(g);
      e.check(inv.alpha == oracle::independence(g), id + " alpha");
      e.check(inv.alpha_prime == oracle::matching(g), id + " alpha'");
      e.check(inv.alpha_double_prime == oracle::total_independence(g), id + " alpha''");
      e.check(inv.beta == oracle::vertex_arboricity(g), id + " beta");
      if (g.size() > 0) {
        e.check(*inv.gamma_prime == oracle::edge_domination(g), id + " gamma'");
        e.check(*inv.beta_prime == oracle::forest_partition(g), id + " beta'");
      }
    });
  }
  e.note(str(graphs) + " graphs");
  return e.outcome();
}

Outcome edge_count_structure() {
  Expect e;
  for (int n = 1; n <= 7; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      const auto id = emit_graph6(g);
      const int alpha = compute_all(g).alpha;
      const auto truth = oracle::total_edge_counts(g);
      for (int k = 1; k <= n; ++k) {
        const auto seen = observed_edge_counts(g, k);
        const auto it = truth.find(k);
        e.check(seen == (it == truth.end() ? std::set<int>{} : it->second), id + " k=" + str(k) + " oracle mismatch");
        const auto range = edge_count_range(k, alpha, n);
        for (int count : seen) e.check(range.contains(count), id + " k=" + str(k) + " e=" + str(count));
      }
    });
  }
  e.check(observed_edge_counts(complete_bipartite(2, 3), 3) == std::set<int>{0, 1, 2}, "K2,3 at k=3");
  return e.outcome();
}

Outcome hamiltonian_checks() {
  Expect e;
  long hamiltonian = 0;
  for (int n = 1; n <= kDefaultCeiling; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      if (!is_hamiltonian(g)) return;
      ++hamiltonian;
      const auto inv = compute_all(g);
      e.check(hamiltonian_edge_independence_check(g, inv, true).holds, emit_graph6(g) + " alpha'");
      e.check(hamiltonian_zero_gap_check(g, inv, true).holds, emit_graph6(g) + " zero gap");
    });
  }
  e.note(str(hamiltonian) + " Hamiltonian classes");
  return e.outcome();
}

Outcome determinism() {
  Expect e;
  SweepOptions one;
  one.workers = 1;
  SweepOptions four;
  four.workers = 4;
  const auto a = to_json(sweep(kDefaultCeiling, one)).dump(2);
  const auto b = to_json(sweep(kDefaultCeiling, four)).dump(2);
  e.check(a == b, "JSON differs between 1 and 4 workers");
  e.note(str(static_cast<long>(a.size())) + " bytes");
  return e.outcome();
}

Outcome graph6_round_trip() {
  Expect e;
  long graphs = 0;
  for (int n = 1; n <= kDefaultCeiling; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      ++graphs;
      const auto text = emit_graph6(g);
      e.check(parse_graph6(text) == g, text);
    });
  }
  e.note(str(graphs) + " graphs");
  return e.outcome();
}

Outcome sharpness_witnesses() {
  Expect e;
  auto contains = [](const std::vector<Graph>& gs, const Graph& h) {
    const auto key = canonical_form(h);
    return std::any_of(gs.begin(), gs.end(), [&](const Graph& g) { return canonical_form(g) == key; });
  };
  for (int n : {3, 5, 7}) e.check(contains(sharp_graphs_by_degree(n, n - 1), complete(n)), "K" + str(n));
  e.check(contains(sharp_graphs_by_degree(4, 3), star(3)), "star K1,3");
  const auto k2 = sharpness_by_degree(2, 1);
  e.check(k2 && canonical_form(*k2) == canonical_form(complete(2)), "K2");
  return e.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0: no limit
  };
  const std::vector<Criterion> criteria = {
      {"1 paper-value regression", paper_values, 1.0},
      {"2 complete-graph sharpness", complete_graph_sharpness, 5.0},
      {"3 exhaustive relation sweep n<=8", exhaustive_sweep, 0},
      {"4 oracle equivalence n<=7", oracle_equivalence, 0},
      {"5 edge-count structure n<=7", edge_count_structure, 0},
      {"6 Hamiltonian checks n<=8", hamiltonian_checks, 0},
      {"7 sweep determinism across workers", determinism, 0},
      {"8 graph6 round trip n<=8", graph6_round_trip, 0},
      {"9 sharpness witnesses", sharpness_witnesses, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    auto outcome = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      outcome.pass = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    failed += !outcome.pass;
    std::printf("%s  %-40s %8.2fs  %s\n", outcome.pass ? "PASS" : "FAIL", c.name, secs, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
