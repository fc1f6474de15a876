#pragma once

#include <ostream>
#include <string>

#include "hermitia/graph.hpp"

namespace hermitia {

inline void PrintTo(const QuartGainGraph& x, std::ostream* os) { *os << "\n" << serialize_graph(x); }

inline void PrintTo(const VertexSet& s, std::ostream* os) {
  *os << "{";
  for (std::size_t j = 0; j < s.size(); ++j) {
    *os << (j ? "," : "") << s[j];
  }
  *os << "}";
}

}  // namespace hermitia

namespace hermitia::testing {

inline QuartGainGraph g(const std::string& text) { return parse_graph(text); }

inline QuartGainGraph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex j = 0; j + 1 < n; ++j) {
    b.add_edge(j, j + 1);
  }
  return b.build();
}

inline QuartGainGraph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      b.add_edge(u, v);
    }
  }
  return b.build();
}

// Triangle with the given gains on pairs (0,1), (1,2), (0,2).
inline QuartGainGraph triangle(Unit a, Unit b, Unit c) { return QuartGainGraph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}}); }

}  // namespace hermitia::testing
