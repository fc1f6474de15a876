#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermitia/graph.hpp"
#include "hermitia/unit.hpp"

namespace hermitia {

/// Per-vertex switching values; apply_switch maps gain(u, v) to
/// conj(theta[u]) * gain(u, v) * theta[v].
struct SwitchAssignment {
  std::vector<Unit> theta;

  static SwitchAssignment identity(std::size_t n) { return {std::vector<Unit>(n, Unit::one())}; }

  std::size_t size() const { return theta.size(); }
  Unit operator[](std::size_t u) const { return theta[u]; }

  /// Pointwise product; applying a then b equals applying a * b.
  friend SwitchAssignment operator*(const SwitchAssignment& a, const SwitchAssignment& b);
  SwitchAssignment conj() const;

  friend bool operator==(const SwitchAssignment&, const SwitchAssignment&) = default;
};

QuartGainGraph apply_switch(const QuartGainGraph& g, const SwitchAssignment& theta);

/// Conjugates every gain (reverses every arc).
QuartGainGraph converse(const QuartGainGraph& g);

/// Reverses every arc of the edge cut between `side` and its complement.
/// Every cut edge must be an arc.
QuartGainGraph two_way_directed(const QuartGainGraph& g, const VertexSet& side);

/// Turns undirected cut edges into arcs and arcs into undirected edges. All
/// arcs of the cut must point the same way across it; new arcs point
/// opposite to the old ones (into `side` when the cut has no arcs).
QuartGainGraph two_way_mixed(const QuartGainGraph& g, const VertexSet& side);

/// Product of gains along u_0 u_1 ... u_{l-1} u_0.
Unit cycle_value(const QuartGainGraph& g, std::span<const Vertex> cycle);

/// Forward arcs minus backward arcs along the traversal. Mixed cycles only.
int cycle_signature(const QuartGainGraph& g, std::span<const Vertex> cycle);

struct Normalized {
  QuartGainGraph graph;
  SwitchAssignment theta;  // graph == apply_switch(input, theta)
};

/// Canonical representative of the four-way switching class: every BFS tree
/// edge (root = smallest id per component, neighbors ascending) gets gain 1.
Normalized tree_normalize(const QuartGainGraph& g);

/// theta with apply_switch(g1, theta) == g2, if any.
std::optional<SwitchAssignment> switching_witness(const QuartGainGraph& g1, const QuartGainGraph& g2);

/// g2 == apply_switch(converse ? converse(h) : h, theta) with h = relabel(g1, perm).
struct Witness {
  std::vector<Vertex> perm;
  SwitchAssignment theta;
  bool converse = false;
};

QuartGainGraph apply_witness(const QuartGainGraph& g1, const Witness& w);

/// Label-preserving equivalence witness (identity perm), converse allowed
/// unless `allow_converse` is false.
std::optional<Witness> equivalence_witness(const QuartGainGraph& g1, const QuartGainGraph& g2,
                                           bool allow_converse = true);

bool switching_equivalent(const QuartGainGraph& g1, const QuartGainGraph& g2, bool allow_converse = true);

/// Searches isomorphisms of the underlying graphs for one under which the
/// graphs are switching equivalent. Throws SizeLimitError above `max_order`.
std::optional<Witness> switching_equivalent_up_to_iso(const QuartGainGraph& g1, const QuartGainGraph& g2,
                                                      std::size_t max_order = 12);

bool is_positive(const QuartGainGraph& g);
bool is_odd_triangle(const QuartGainGraph& g);
bool is_even_triangle(const QuartGainGraph& g);

}  // namespace hermitia
