#include "hermitia/switching.hpp"

#include <algorithm>
#include <deque>

#include "hermitia/errors.hpp"

namespace hermitia {

SwitchAssignment operator*(const SwitchAssignment& a, const SwitchAssignment& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("switch assignment length mismatch");
  }
  SwitchAssignment out = a;
  for (std::size_t u = 0; u < out.size(); ++u) {
    out.theta[u] *= b.theta[u];
  }
  return out;
}

SwitchAssignment SwitchAssignment::conj() const {
  SwitchAssignment out = *this;
  for (Unit& t : out.theta) {
    t = t.conj();
  }
  return out;
}

QuartGainGraph apply_switch(const QuartGainGraph& g, const SwitchAssignment& theta) {
  if (theta.size() != g.order()) {
    throw PreconditionError("switch assignment has length " + std::to_string(theta.size()) + ", graph has order " +
                            std::to_string(g.order()));
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v, theta[e.u].conj() * e.gain * theta[e.v]);
  }
  return b.build();
}

QuartGainGraph converse(const QuartGainGraph& g) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v, e.gain.conj());
  }
  return b.build();
}

namespace {

void check_side(const QuartGainGraph& g, const VertexSet& side) {
  if (!side.empty() && side.back() >= g.order()) {
    throw std::out_of_range("cut side contains an out-of-range vertex");
  }
}

SwitchAssignment side_assignment(std::size_t n, const VertexSet& side, Unit value) {
  SwitchAssignment theta = SwitchAssignment::identity(n);
  for (Vertex u : side) {
    theta.theta[u] = value;
  }
  return theta;
}

}  // namespace

QuartGainGraph two_way_directed(const QuartGainGraph& g, const VertexSet& side) {
  check_side(g, side);
  for (const Edge& e : g.edges()) {
    if (side.contains(e.u) != side.contains(e.v) && e.gain.is_real()) {
      throw PreconditionError("two_way_directed: cut edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              "} is not an arc");
    }
  }
  return apply_switch(g, side_assignment(g.order(), side, Unit::minus_one()));
}

QuartGainGraph two_way_mixed(const QuartGainGraph& g, const VertexSet& side) {
  check_side(g, side);
  // Orientation of the cut arcs, read from the side vertex: i leaves `side`.
  std::optional<Unit> outward;
  for (const Edge& e : g.edges()) {
    const bool in_u = side.contains(e.u);
    if (in_u == side.contains(e.v)) {
      continue;
    }
    const Unit from_side = in_u ? e.gain : e.gain.conj();
    if (from_side == Unit::minus_one()) {
      throw PreconditionError("two_way_mixed: cut edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              "} has gain -1");
    }
    if (from_side == Unit::one()) {
      continue;
    }
    if (outward && *outward != from_side) {
      throw PreconditionError("two_way_mixed: cut arcs point both ways");
    }
    outward = from_side;
  }
  // theta equal to the outward gain sends those arcs to 1 and undirected
  // edges to arcs pointing back into `side`.
  const Unit value = outward ? *outward : Unit::i();
  return apply_switch(g, side_assignment(g.order(), side, value));
}

namespace {

void check_cycle(const QuartGainGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) {
    throw PreconditionError("a cycle needs at least three vertices");
  }
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("cycle repeats a vertex");
  }
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const Vertex u = cycle[j];
    const Vertex v = cycle[(j + 1) % cycle.size()];
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
      throw PreconditionError("vertex sequence is not a cycle of the graph");
    }
  }
}

}  // namespace

Unit cycle_value(const QuartGainGraph& g, std::span<const Vertex> cycle) {
  check_cycle(g, cycle);
  Unit value = Unit::one();
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    value *= *g.gain(cycle[j], cycle[(j + 1) % cycle.size()]);
  }
  return value;
}

int cycle_signature(const QuartGainGraph& g, std::span<const Vertex> cycle) {
  check_cycle(g, cycle);
  int sigma = 0;
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const Unit w = *g.gain(cycle[j], cycle[(j + 1) % cycle.size()]);
    if (w == Unit::i()) {
      ++sigma;
    } else if (w == Unit::minus_i()) {
      --sigma;
    } else if (w == Unit::minus_one()) {
      throw PreconditionError("cycle_signature: gain -1 is not a mixed edge");
    }
  }
  return sigma;
}

Normalized tree_normalize(const QuartGainGraph& g) {
  const std::size_t n = g.order();
  SwitchAssignment theta = SwitchAssignment::identity(n);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) {
      continue;
    }
    seen[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex p = queue.front();
      queue.pop_front();
      for (Vertex c : g.neighbors(p)) {
        if (!seen[c]) {
          seen[c] = true;
          theta.theta[c] = theta[p] * g.gain(p, c)->conj();
          queue.push_back(c);
        }
      }
    }
  }
  return {apply_switch(g, theta), theta};
}

std::optional<SwitchAssignment> switching_witness(const QuartGainGraph& g1, const QuartGainGraph& g2) {
  if (g1.order() != g2.order() || underlying(g1) != underlying(g2)) {
    return std::nullopt;
  }
  const Normalized a = tree_normalize(g1);
  const Normalized b = tree_normalize(g2);
  if (a.graph != b.graph) {
    return std::nullopt;
  }
  return a.theta * b.theta.conj();
}

QuartGainGraph apply_witness(const QuartGainGraph& g1, const Witness& w) {
  QuartGainGraph h = relabel(g1, w.perm);
  if (w.converse) {
    h = converse(h);
  }
  return apply_switch(h, w.theta);
}

namespace {

std::vector<Vertex> identity_perm(std::size_t n) {
  std::vector<Vertex> perm(n);
  for (std::size_t u = 0; u < n; ++u) {
    perm[u] = u;
  }
  return perm;
}

}  // namespace

std::optional<Witness> equivalence_witness(const QuartGainGraph& g1, const QuartGainGraph& g2, bool allow_converse) {
  if (auto theta = switching_witness(g1, g2)) {
    return Witness{identity_perm(g1.order()), std::move(*theta), false};
  }
  if (allow_converse) {
    if (auto theta = switching_witness(converse(g1), g2)) {
      return Witness{identity_perm(g1.order()), std::move(*theta), true};
    }
  }
  return std::nullopt;
}

bool switching_equivalent(const QuartGainGraph& g1, const QuartGainGraph& g2, bool allow_converse) {
  return equivalence_witness(g1, g2, allow_converse).has_value();
}

namespace {

struct IsoSearch {
  const QuartGainGraph& g1;
  const QuartGainGraph& g2;
  std::vector<Vertex> perm;
  std::vector<bool> used;
  std::optional<Witness> found;

  bool extend(Vertex u) {
    const std::size_t n = g1.order();
    if (u == n) {
      if (auto w = equivalence_witness(relabel(g1, perm), g2)) {
        w->perm = perm;
        found = std::move(w);
        return true;
      }
      return false;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || g1.degree(u) != g2.degree(x)) {
        continue;
      }
      bool ok = true;
      for (Vertex w = 0; w < u && ok; ++w) {
        ok = g1.adjacent(u, w) == g2.adjacent(x, perm[w]);
      }
      if (!ok) {
        continue;
      }
      perm[u] = x;
      used[x] = true;
      if (extend(u + 1)) {
        return true;
      }
      used[x] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Witness> switching_equivalent_up_to_iso(const QuartGainGraph& g1, const QuartGainGraph& g2,
                                                      std::size_t max_order) {
  if (g1.order() > max_order || g2.order() > max_order) {
    throw SizeLimitError("isomorphism search limited to order " + std::to_string(max_order));
  }
  if (g1.order() != g2.order() || g1.size() != g2.size()) {
    return std::nullopt;
  }
  IsoSearch search{g1, g2, std::vector<Vertex>(g1.order()), std::vector<bool>(g1.order(), false), std::nullopt};
  search.extend(0);
  return search.found;
}

bool is_positive(const QuartGainGraph& g) {
  const auto edges = tree_normalize(g).graph.edges();
  return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.gain == Unit::one(); });
}

namespace {

std::optional<Unit> triangle_value(const QuartGainGraph& g) {
  if (g.order() != 3 || g.size() != 3) {
    return std::nullopt;
  }
  const Vertex cycle[] = {0, 1, 2};
  return cycle_value(g, cycle);
}

}  // namespace

bool is_odd_triangle(const QuartGainGraph& g) {
  const auto value = triangle_value(g);
  return value && !value->is_real();
}

bool is_even_triangle(const QuartGainGraph& g) {
  const auto value = triangle_value(g);
  return value && value->is_real();
}

}  // namespace hermitia
