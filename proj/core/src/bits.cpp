#include "gso/bits.hpp"

namespace gso {

VertexSet make_vertex_set(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.set(static_cast<std::size_t>(v));
  return s;
}

}  // namespace gso
