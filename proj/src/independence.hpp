#pragma once

#include <vector>

#include "totind/graph.hpp"

namespace totind::detail {

struct MaskSolution {
  int size = 0;
  VertexMask set = 0;
};

// Lexicographically smallest maximum independent subset of `candidates`.
MaskSolution max_independent_within(std::span<const VertexMask> adj, VertexMask candidates);

}  // namespace totind::detail
