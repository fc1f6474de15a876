#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hermitia/unit.hpp"

namespace hermitia {

using Vertex = std::size_t;

/// One edge record. `gain` is the value for the ordered pair (u, v); the
/// pair (v, u) carries its conjugate.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Unit gain;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Strictly increasing list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  /// Position of v inside the set; requires contains(v).
  std::size_t index_of(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<Vertex> ids_;
};

class QuartGainGraph;

/// Mutable staging area for a QuartGainGraph. Rejects self-loops, repeated
/// pairs and out-of-range ids as they are added.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  GraphBuilder& add_edge(Vertex u, Vertex v, Unit gain = Unit::one());
  GraphBuilder& add_edge(const Edge& e) { return add_edge(e.u, e.v, e.gain); }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t order() const { return n_; }

  QuartGainGraph build() const;

 private:
  friend class QuartGainGraph;
  std::size_t n_;
  std::vector<std::int8_t> code_;  // row-major n*n, only u < v populated
};

/// Labeled graph on vertices 0..n-1 with a gain in {1, i, -1, -i} per edge.
/// Mixed graphs are exactly the graphs with no gain -1: gain 1 is an
/// undirected edge, gain i on (u, v) is the arc u->v.
class QuartGainGraph {
 public:
  QuartGainGraph() = default;
  explicit QuartGainGraph(std::size_t n);
  QuartGainGraph(std::size_t n, std::span<const Edge> edges);
  QuartGainGraph(std::size_t n, std::initializer_list<Edge> edges)
      : QuartGainGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  std::optional<Unit> gain(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex u) const { return adj_.at(u); }
  std::size_t degree(Vertex u) const { return adj_.at(u).size(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_mixed() const;

  friend bool operator==(const QuartGainGraph& a, const QuartGainGraph& b) {
    return a.n_ == b.n_ && a.code_ == b.code_;
  }

 private:
  friend class GraphBuilder;
  void index_adjacency();

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::int8_t> code_;
  std::vector<std::vector<Vertex>> adj_;
};

using Graph = QuartGainGraph;

// -- .qgg text format -------------------------------------------------------

/// Parses the line-oriented .qgg format; throws ParseError with a line number.
QuartGainGraph parse_graph(std::string_view text);

/// Normalized .qgg text: header, then one line per edge in (u, v) order using
/// "U" for gain 1, "A" for arcs and "G u v -1" for gain -1.
std::string serialize_graph(const QuartGainGraph& g);

// -- structural queries (all judged on the underlying graph) ----------------

QuartGainGraph underlying(const QuartGainGraph& g);

/// Order-preserving compaction onto 0..|s|-1.
QuartGainGraph induced_subgraph(const QuartGainGraph& g, const VertexSet& s);
QuartGainGraph delete_vertex(const QuartGainGraph& g, Vertex v);
QuartGainGraph delete_vertices(const QuartGainGraph& g, const VertexSet& s);

/// Vertex sets of the connected components, sorted by smallest member.
std::vector<VertexSet> components(const QuartGainGraph& g);
bool is_connected(const QuartGainGraph& g);

VertexSet pendant_vertices(const QuartGainGraph& g);
VertexSet cut_vertices(const QuartGainGraph& g);
VertexSet isolated_vertices(const QuartGainGraph& g);
VertexSet non_isolated_vertices(const QuartGainGraph& g);

/// Identifies v1 of g1 with v2 of g2. Vertices of g1 keep their ids; the
/// remaining vertices of g2 follow in increasing order starting at |g1|.
QuartGainGraph coalesce(const QuartGainGraph& g1, Vertex v1, const QuartGainGraph& g2, Vertex v2);

/// Vertex u of g becomes perm[u]; perm must be a permutation of 0..n-1.
QuartGainGraph relabel(const QuartGainGraph& g, std::span<const Vertex> perm);

QuartGainGraph disjoint_union(const QuartGainGraph& g1, const QuartGainGraph& g2);

/// Complement of the underlying graph (all gains 1).
QuartGainGraph complement(const QuartGainGraph& g);

}  // namespace hermitia
