#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "totind/enumeration.hpp"
#include "totind/generators.hpp"
#include "totind/solvers.hpp"

using namespace totind;

namespace {

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return from_edge_list(n, edges);
}

Graph without_edge(const Graph& g, EdgeId drop) {
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (e != drop) edges.push_back(g.edge(e));
  }
  return from_edge_list(g.order(), edges);
}

}  // namespace

TEST_CASE("independence number") {
  CHECK(independence_number(complete_bipartite(2, 3)).value == 3);
  CHECK(independence_number(paper_figure(Figure::alpha_figure)).value == 3);
  for (int n = 1; n <= 8; ++n) CHECK(independence_number(complete(n)).value == 1);
  CHECK(independence_number(petersen()).value == 4);

  const auto k23 = independence_number(complete_bipartite(2, 3));
  CHECK(k23.witness == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("edge independence number") {
  CHECK(edge_independence_number(complete_bipartite(2, 3)).value == 2);
  for (int n : {3, 5, 7, 9}) CHECK(edge_independence_number(complete(n)).value == (n - 1) / 2);
  CHECK(edge_independence_number(paper_figure(Figure::alpha_figure)).value == 1);
  CHECK(edge_independence_number(from_edge_list(1, {})).value == 0);
  CHECK(edge_independence_number(petersen()).value == 5);
}

TEST_CASE("maximum matching handles odd cycles and large graphs") {
  auto size_of = [](const Graph& g) {
    int matched = 0;
    for (Vertex m : maximum_matching(g)) matched += (m != -1);
    return matched / 2;
  };
  CHECK(size_of(cycle(1001)) == 500);
  CHECK(size_of(complete(101)) == 50);
  CHECK(size_of(path(200)) == 100);
  // Two triangles joined by a path: blossoms must be contracted.
  CHECK(size_of(from_edge_list(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}})) == 4);

  const auto mate = maximum_matching(cycle(1001));
  for (Vertex v = 0; v < 1001; ++v) {
    if (mate[static_cast<std::size_t>(v)] != -1) {
      CHECK(mate[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])] == v);
    }
  }
}

TEST_CASE("total independence number") {
  CHECK(total_independence_number(complete_bipartite(2, 3)).value == 3);
  CHECK(total_independence_number(complete(5)).value == 3);
  CHECK(total_independence_number(path(4)).value == 3);
  CHECK(total_independence_number(from_edge_list(1, {})).value == 1);

  const auto k23 = total_independence_number(complete_bipartite(2, 3));
  CHECK(is_total_independent(complete_bipartite(2, 3), k23.witness));
  // Edges order before vertices, so the witness uses an edge when it can.
  CHECK(k23.witness.edges.size() == 2);
}

TEST_CASE("edge domination number") {
  CHECK(edge_domination_number(paper_figure(Figure::alpha_figure)).value == 1);
  CHECK(edge_domination_number(complete(2)).value == 1);
  CHECK(edge_domination_number(cycle(5)).value == 2);
  CHECK_THROWS_AS(edge_domination_number(from_edge_list(1, {})), GraphError);
  CHECK_THROWS_AS(edge_domination_number(discrete(3)), GraphError);
}

TEST_CASE("vertex arboricity") {
  CHECK(vertex_arboricity(path(4)).value == 1);
  CHECK(vertex_arboricity(complete(4)).value == 2);
  CHECK(vertex_arboricity(cycle(5)).value == 2);
  CHECK(vertex_arboricity(complete(5)).value == 3);
  CHECK(vertex_arboricity(from_edge_list(1, {})).value == 1);
  const auto c5 = vertex_arboricity(cycle(5));
  CHECK(c5.witness == std::vector<int>{0, 0, 0, 0, 1});
}

TEST_CASE("edge arboricity") {
  CHECK(edge_arboricity(path(6)) == 1);
  CHECK(edge_arboricity(star(5)) == 1);
  CHECK(edge_arboricity(complete(4)) == 2);
  CHECK(edge_arboricity(complete(5)) == 3);
  CHECK(edge_arboricity(complete(8)) == 4);
  CHECK_THROWS_AS(edge_arboricity(discrete(2)), GraphError);
  CHECK_THROWS_AS(edge_arboricity(path(25)), GraphError);
}

TEST_CASE("compute_all") {
  const auto k23 = compute_all(complete_bipartite(2, 3));
  CHECK(k23.alpha == 3);
  CHECK(k23.alpha_prime == 2);
  CHECK(k23.alpha_double_prime == 3);
  CHECK(k23.gamma_prime == 2);

  const auto k3 = compute_all(complete(3));
  CHECK(k3.alpha == 1);
  CHECK(k3.alpha_prime == 1);

  const auto p3 = compute_all(path(3));
  CHECK(p3.alpha == 2);
  CHECK(p3.alpha_prime == 1);
  CHECK(p3.alpha_double_prime == 2);
  CHECK(p3.gamma_prime == 1);

  const auto single = compute_all(from_edge_list(1, {}));
  CHECK(single.alpha_double_prime == 1);
  CHECK_FALSE(single.gamma_prime.has_value());
  CHECK_FALSE(single.beta_prime.has_value());

  CHECK_THROWS_AS(compute_all(from_edge_list(4, {{0, 1}, {2, 3}})), GraphError);
  CHECK_THROWS_AS(compute_all(from_edge_list(0, {})), GraphError);
}

TEST_CASE("solvers match exhaustive oracles on every connected graph up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      INFO(to_string(g));
      const auto inv = compute_all(g);
      CHECK(inv.alpha == oracle::independence(g));
      CHECK(inv.alpha_prime == oracle::matching(g));
      CHECK(inv.alpha_double_prime == oracle::total_independence(g));
      CHECK(inv.beta == oracle::vertex_arboricity(g));
      if (g.size() > 0) {
        CHECK(*inv.gamma_prime == oracle::edge_domination(g));
        CHECK(*inv.beta_prime == oracle::forest_partition(g));
      }
    });
  }
}

TEST_CASE("matching oracle agreement on random graphs up to order 10") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 9;
    const auto g = random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.5);
    INFO(to_string(g));
    CHECK(edge_independence_number(g).value == oracle::matching(g));
  }
}

TEST_CASE("witnesses are valid and lexicographically smallest") {
  for (int n = 1; n <= 6; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      INFO(to_string(g));
      const auto inv = compute_all(g);
      CHECK(is_independent_set(g, inv.independent_set));
      CHECK(static_cast<int>(inv.independent_set.size()) == inv.alpha);
      CHECK(inv.independent_set == oracle::lex_min_independent(g));

      CHECK(is_matching(g, inv.matching));
      CHECK(static_cast<int>(inv.matching.size()) == inv.alpha_prime);
      CHECK(inv.matching == oracle::lex_min_matching(g));

      CHECK(is_total_independent(g, inv.total_independent_set));
      CHECK(static_cast<int>(inv.total_independent_set.cardinality()) == inv.alpha_double_prime);

      CHECK(is_acyclic_partition(g, inv.acyclic_partition));
      CHECK(*std::max_element(inv.acyclic_partition.begin(), inv.acyclic_partition.end()) + 1 == inv.beta);

      if (g.size() > 0) {
        CHECK(is_edge_dominating_set(g, inv.edge_dominating_set));
        CHECK(static_cast<int>(inv.edge_dominating_set.size()) == *inv.gamma_prime);
      }
    });
  }
}

TEST_CASE("edge domination identity and maximum matchings dominate") {
  for (int n = 2; n <= 7; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      INFO(to_string(g));
      const auto inv = compute_all(g);
      CHECK(*inv.gamma_prime + inv.alpha_double_prime == inv.n);
      CHECK(is_edge_dominating_set(g, inv.matching));
    });
  }
}

TEST_CASE("every maximal matching dominates (empirical, order <= 6)") {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      for (const auto& m : oracle::maximal_matchings(g)) {
        INFO(to_string(g));
        CHECK(is_edge_dominating_set(g, m));
      }
    });
  }
}

TEST_CASE("property: deleting an edge never lowers alpha nor raises alpha'") {
  std::mt19937 rng(3141);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 8;
    const auto g = random_graph(rng, n, 0.5);
    if (g.size() == 0) continue;
    std::uniform_int_distribution<EdgeId> pick(0, g.size() - 1);
    const auto h = without_edge(g, pick(rng));
    CHECK(independence_number(h).value >= independence_number(g).value);
    CHECK(edge_independence_number(h).value <= edge_independence_number(g).value);
  }
}

TEST_CASE("property: invariants are labeling independent") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 6;
    auto g = random_graph(rng, n, 0.55);
    if (!is_connected(g)) continue;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = compute_all(g);
    const auto b = compute_all(oracle::relabel(g, perm));
    CHECK(a.alpha == b.alpha);
    CHECK(a.alpha_prime == b.alpha_prime);
    CHECK(a.alpha_double_prime == b.alpha_double_prime);
    CHECK(a.gamma_prime == b.gamma_prime);
    CHECK(a.beta == b.beta);
    CHECK(a.beta_prime == b.beta_prime);
  }
}
