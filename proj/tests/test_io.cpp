#include <doctest.h>

#include <random>

#include "totind/enumeration.hpp"
#include "totind/generators.hpp"
#include "totind/io.hpp"

using namespace totind;

TEST_CASE("emit_graph6") {
  CHECK(emit_graph6(complete(2)) == "A_");
  CHECK(emit_graph6(discrete(2)) == "A?");
  CHECK(emit_graph6(complete(3)) == "Bw");
  CHECK(emit_graph6(from_edge_list(1, {})) == "@");
  CHECK(emit_graph6(from_edge_list(0, {})) == "?");
}

TEST_CASE("parse_graph6") {
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
  CHECK(parse_graph6("Bw\n") == complete(3));
  CHECK(canonical_form(parse_graph6("D]o")) == canonical_form(complete_bipartite(2, 3)));
}

TEST_CASE("parse_graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);     // missing body
  CHECK_THROWS_AS(parse_graph6("A__"), ParseError);   // too long
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);    // nonzero padding
  CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError); // byte out of range
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);
}

TEST_CASE("graph6 round trips, including the extended header") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  for (int n : {62, 63, 64, 100, 258}) {
    const auto g = cycle(n);
    const auto text = emit_graph6(g);
    CAPTURE(n);
    CHECK(text[0] == (n <= 62 ? static_cast<char>(n + 63) : '~'));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("property: random graphs round trip through graph6") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 40;
    std::bernoulli_distribution coin(0.3);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    const auto g = from_edge_list(n, edges);
    CHECK(parse_graph6(emit_graph6(g)) == g);
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
  }
}

TEST_CASE("parse_graph6_lines") {
  const auto gs = parse_graph6_lines("Bw\n\n# comment\nA_\n");
  REQUIRE(gs.size() == 2);
  CHECK(gs[0] == complete(3));
  CHECK(gs[1] == complete(2));
  try {
    parse_graph6_lines("Bw\nA`\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parse_edge_list") {
  CHECK(parse_edge_list("n 4\n0 1\n1 2\n1 3\n") == paper_figure(Figure::alpha_figure));
  CHECK(parse_edge_list("# star\n\nn 4\n0 1 # first\n1 2\n1 3\n") == paper_figure(Figure::alpha_figure));
  CHECK(parse_edge_list("n 1\n") == from_edge_list(1, {}));
  CHECK(parse_edge_list("n 2\n0 1\n1 0\n").size() == 1);
}

TEST_CASE("parse_edge_list reports line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n 3\n0 1\n0 0\n") == 3);
  CHECK(line_of("n 3\n0 1\n0 5\n") == 3);
  CHECK(line_of("n 3\n0 x\n") == 2);
  CHECK(line_of("0 1\n") == 1);
  CHECK(line_of("n 3\n0 1 2\n") == 2);
  CHECK(line_of("") == 0);
  CHECK_THROWS_WITH(parse_edge_list("n 3\n0 1\n0 0\n"), doctest::Contains("line 3"));
}

TEST_CASE("emit_edge_list") {
  CHECK(emit_edge_list(path(3)) == "n 3\n0 1\n1 2\n");
  CHECK(emit_edge_list(from_edge_list(1, {})) == "n 1\n");
}
