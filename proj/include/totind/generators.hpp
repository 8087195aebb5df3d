#pragma once

#include <string_view>

#include "totind/graph.hpp"

namespace totind {

/// K_n. Throws GraphError for n < 1.
Graph complete(int n);
/// K_{a,b} with part A = {0..a-1} and part B = {a..a+b-1}.
Graph complete_bipartite(int a, int b);
Graph path(int n);
/// Throws GraphError for n < 3.
Graph cycle(int n);
/// K_{1,leaves} with centre 0.
Graph star(int leaves);
Graph discrete(int n);
Graph petersen();

/// The two worked figures of basic definitions, relabeled 0-based.
enum class Figure {
  four_vertex_five_edge,  // K4 minus the edge {0,3}
  alpha_figure,           // star centred at vertex 1 with leaves 0, 2, 3
};

Graph paper_figure(Figure which);
std::string_view to_string(Figure which);

}  // namespace totind
