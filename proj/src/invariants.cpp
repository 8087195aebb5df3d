#include "totind/solvers.hpp"

namespace totind {

InvariantSet compute_all(const Graph& g) {
  if (g.order() < 1) throw GraphError("compute_all requires order >= 1");
  if (!is_connected(g)) throw GraphError("compute_all requires a connected graph: " + to_string(g));

  InvariantSet inv;
  inv.n = g.order();
  inv.m = g.size();

  auto independent = independence_number(g);
  inv.alpha = independent.value;
  inv.independent_set = std::move(independent.witness);

  auto matching = edge_independence_number(g);
  inv.alpha_prime = matching.value;
  inv.matching = std::move(matching.witness);

  auto total = total_independence_number(g);
  inv.alpha_double_prime = total.value;
  inv.total_independent_set = std::move(total.witness);

  auto partition = vertex_arboricity(g);
  inv.beta = partition.value;
  inv.acyclic_partition = std::move(partition.witness);

  if (inv.m > 0) {
    auto dominating = edge_domination_number(g);
    inv.gamma_prime = dominating.value;
    inv.edge_dominating_set = std::move(dominating.witness);
    inv.beta_prime = edge_arboricity(g);
  }
  return inv;
}

}  // namespace totind
