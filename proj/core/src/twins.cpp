#include "hermitia/twins.hpp"

#include <stdexcept>

namespace hermitia {

std::optional<Unit> are_twins(const QuartGainGraph& g, Vertex u, Vertex w) {
  if (u >= g.order() || w >= g.order()) {
    throw std::out_of_range("vertex id out of range");
  }
  if (u == w) {
    return Unit::one();
  }
  if (g.adjacent(u, w)) {
    return std::nullopt;
  }
  std::optional<Unit> alpha;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == u || x == w) {
      continue;
    }
    const auto hu = g.gain(u, x);
    const auto hw = g.gain(w, x);
    if (hu.has_value() != hw.has_value()) {
      return std::nullopt;
    }
    if (!hu) {
      continue;
    }
    const Unit ratio = *hu * hw->conj();
    if (alpha && *alpha != ratio) {
      return std::nullopt;
    }
    alpha = ratio;
  }
  return alpha.value_or(Unit::one());
}

TwinPartition twin_partition(const QuartGainGraph& g) {
  const std::size_t n = g.order();
  TwinPartition out;
  out.class_of.assign(n, 0);
  out.alpha.assign(n, Unit::one());
  std::vector<std::vector<Vertex>> members;
  for (Vertex u = 0; u < n; ++u) {
    bool placed = false;
    for (std::size_t c = 0; c < out.representative.size() && !placed; ++c) {
      if (const auto alpha = are_twins(g, u, out.representative[c])) {
        members[c].push_back(u);
        out.class_of[u] = c;
        out.alpha[u] = *alpha;
        placed = true;
      }
    }
    if (!placed) {
      out.class_of[u] = out.representative.size();
      out.representative.push_back(u);
      members.push_back({u});
    }
  }
  for (auto& m : members) {
    out.classes.emplace_back(std::move(m));
  }
  return out;
}

QuartGainGraph twin_reduction(const QuartGainGraph& g) {
  const TwinPartition part = twin_partition(g);
  return induced_subgraph(g, VertexSet(part.representative));
}

}  // namespace hermitia
