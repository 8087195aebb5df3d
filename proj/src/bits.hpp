#pragma once

#include <bit>

#include "totind/graph.hpp"

namespace totind::bits {

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline int count(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }
inline VertexMask all(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

template <class F>
void for_each(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline void require_mask_order(const Graph& g, const char* what) {
  if (g.order() > kMaskOrder) {
    throw GraphError(std::string(what) + " supports order <= 64, got " + std::to_string(g.order()));
  }
}

}  // namespace totind::bits
