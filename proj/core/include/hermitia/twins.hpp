#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermitia/graph.hpp"
#include "hermitia/unit.hpp"

namespace hermitia {

/// alpha with h_ux = alpha * h_wx for every x outside {u, w}, provided u and
/// w are non-adjacent. Rows that are both zero give alpha = 1.
std::optional<Unit> are_twins(const QuartGainGraph& g, Vertex u, Vertex w);

struct TwinPartition {
  std::vector<VertexSet> classes;       // ordered by representative
  std::vector<Vertex> representative;   // smallest member of each class
  std::vector<std::size_t> class_of;    // per vertex
  std::vector<Unit> alpha;              // per vertex, row(u) = alpha[u] * row(rep)

  std::size_t size() const { return classes.size(); }
};

TwinPartition twin_partition(const QuartGainGraph& g);

/// Induced subgraph on the class representatives.
QuartGainGraph twin_reduction(const QuartGainGraph& g);

}  // namespace hermitia
