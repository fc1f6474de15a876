#include "hermitia/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "hermitia/errors.hpp"

namespace hermitia {

namespace {

constexpr std::int8_t kNoEdge = -1;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(' ', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a decimal integer, got '" + std::string(token) + "'");
  }
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "integer out of range: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

// -- VertexSet --------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::size_t VertexSet::index_of(Vertex v) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in set");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

// -- GraphBuilder -----------------------------------------------------------

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), code_(n * n, kNoEdge) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v, Unit gain) {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("vertex id out of range in edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") for order " + std::to_string(n_));
  }
  if (u == v) {
    throw PreconditionError("self-loop at vertex " + std::to_string(u));
  }
  if (u > v) {
    std::swap(u, v);
    gain = gain.conj();
  }
  std::int8_t& slot = code_[u * n_ + v];
  if (slot != kNoEdge) {
    throw PreconditionError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  slot = static_cast<std::int8_t>(gain.power());
  return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u == v || u >= n_ || v >= n_) {
    return false;
  }
  if (u > v) {
    std::swap(u, v);
  }
  return code_[u * n_ + v] != kNoEdge;
}

QuartGainGraph GraphBuilder::build() const {
  QuartGainGraph g;
  g.n_ = n_;
  g.code_ = code_;
  g.index_adjacency();
  return g;
}

// -- QuartGainGraph ---------------------------------------------------------

QuartGainGraph::QuartGainGraph(std::size_t n) : n_(n), code_(n * n, kNoEdge), adj_(n) {}

QuartGainGraph::QuartGainGraph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) {
    b.add_edge(e);
  }
  *this = b.build();
}

void QuartGainGraph::index_adjacency() {
  adj_.assign(n_, {});
  m_ = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (code_[u * n_ + v] != kNoEdge) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
      }
    }
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
  }
}

std::optional<Unit> QuartGainGraph::gain(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("vertex id out of range");
  }
  if (u == v) {
    return std::nullopt;
  }
  if (u < v) {
    const std::int8_t c = code_[u * n_ + v];
    return c == kNoEdge ? std::nullopt : std::optional<Unit>(Unit::from_power(c));
  }
  const std::int8_t c = code_[v * n_ + u];
  return c == kNoEdge ? std::nullopt : std::optional<Unit>(Unit::from_power(c).conj());
}

bool QuartGainGraph::adjacent(Vertex u, Vertex v) const {
  if (u == v) {
    return false;
  }
  if (u > v) {
    std::swap(u, v);
  }
  return code_.at(u * n_ + v) != kNoEdge;
}

std::vector<Edge> QuartGainGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const std::int8_t c = code_[u * n_ + v];
      if (c != kNoEdge) {
        out.push_back({u, v, Unit::from_power(c)});
      }
    }
  }
  return out;
}

bool QuartGainGraph::is_mixed() const {
  return std::none_of(code_.begin(), code_.end(), [](std::int8_t c) { return c == Unit::minus_one().power(); });
}

// -- .qgg -------------------------------------------------------------------

QuartGainGraph parse_graph(std::string_view text) {
  std::optional<GraphBuilder> builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#' ||
        std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; })) {
      continue;
    }
    const auto tokens = split_tokens(line);
    if (std::any_of(tokens.begin(), tokens.end(), [](std::string_view t) { return t.empty(); })) {
      throw ParseError(line_no, "tokens must be separated by single spaces");
    }
    if (!builder) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      builder.emplace(parse_count(tokens[1], line_no));
      continue;
    }
    const std::string_view kind = tokens[0];
    const std::size_t expected = kind == "G" ? 4 : 3;
    if ((kind != "U" && kind != "A" && kind != "G") || tokens.size() != expected) {
      if (kind == "n") {
        throw ParseError(line_no, "repeated header");
      }
      throw ParseError(line_no, "unrecognized record '" + std::string(line) + "'");
    }
    const Vertex a = parse_count(tokens[1], line_no);
    const Vertex b = parse_count(tokens[2], line_no);
    Unit gain = Unit::one();
    if (kind == "A") {
      gain = Unit::i();
    } else if (kind == "G") {
      const auto parsed = Unit::parse(tokens[3]);
      if (!parsed) {
        throw ParseError(line_no, "unknown gain token '" + std::string(tokens[3]) + "'");
      }
      gain = *parsed;
    }
    if (a >= builder->order() || b >= builder->order()) {
      throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(builder->order()) + ")");
    }
    if (a == b) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    }
    if (builder->has_edge(a, b)) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
    }
    builder->add_edge(a, b, gain);
  }
  if (!builder) {
    throw ParseError(line_no, "missing header 'n <count>'");
  }
  return builder->build();
}

std::string serialize_graph(const QuartGainGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) {
    if (e.gain == Unit::one()) {
      out << "U " << e.u << ' ' << e.v << '\n';
    } else if (e.gain == Unit::i()) {
      out << "A " << e.u << ' ' << e.v << '\n';
    } else if (e.gain == Unit::minus_i()) {
      out << "A " << e.v << ' ' << e.u << '\n';
    } else {
      out << "G " << e.u << ' ' << e.v << ' ' << e.gain.token() << '\n';
    }
  }
  return out.str();
}

// -- structure --------------------------------------------------------------

QuartGainGraph underlying(const QuartGainGraph& g) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v);
  }
  return b.build();
}

QuartGainGraph induced_subgraph(const QuartGainGraph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.order()) {
    throw std::out_of_range("vertex id " + std::to_string(s.back()) + " out of range");
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (const auto w = g.gain(s[i], s[j])) {
        b.add_edge(i, j, *w);
      }
    }
  }
  return b.build();
}

QuartGainGraph delete_vertices(const QuartGainGraph& g, const VertexSet& s) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!s.contains(u)) {
      keep.push_back(u);
    }
  }
  if (!s.empty() && s.back() >= g.order()) {
    throw std::out_of_range("vertex id " + std::to_string(s.back()) + " out of range");
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

QuartGainGraph delete_vertex(const QuartGainGraph& g, Vertex v) { return delete_vertices(g, VertexSet{v}); }

std::vector<VertexSet> components(const QuartGainGraph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) {
      continue;
    }
    std::vector<Vertex> members;
    stack.push_back(root);
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const QuartGainGraph& g) { return components(g).size() <= 1; }

VertexSet pendant_vertices(const QuartGainGraph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 1) {
      out.push_back(u);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet isolated_vertices(const QuartGainGraph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0) {
      out.push_back(u);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet non_isolated_vertices(const QuartGainGraph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) > 0) {
      out.push_back(u);
    }
  }
  return VertexSet(std::move(out));
}

namespace {

// Hopcroft-Tarjan articulation points.
struct ArticulationSearch {
  const QuartGainGraph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<bool> is_cut;
  int clock = 0;

  explicit ArticulationSearch(const QuartGainGraph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), false) {}

  void visit(Vertex u, std::optional<Vertex> parent) {
    disc[u] = low[u] = clock++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] < 0) {
        ++children;
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent && low[w] >= disc[u]) {
          is_cut[u] = true;
        }
      } else if (!parent || w != *parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (!parent && children > 1) {
      is_cut[u] = true;
    }
  }
};

}  // namespace

VertexSet cut_vertices(const QuartGainGraph& g) {
  ArticulationSearch search(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (search.disc[u] < 0) {
      search.visit(u, std::nullopt);
    }
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (search.is_cut[u]) {
      out.push_back(u);
    }
  }
  return VertexSet(std::move(out));
}

QuartGainGraph coalesce(const QuartGainGraph& g1, Vertex v1, const QuartGainGraph& g2, Vertex v2) {
  if (v1 >= g1.order() || v2 >= g2.order()) {
    throw std::out_of_range("coalescence vertex out of range");
  }
  const std::size_t n1 = g1.order();
  std::vector<Vertex> map2(g2.order());
  Vertex next = n1;
  for (Vertex u = 0; u < g2.order(); ++u) {
    map2[u] = u == v2 ? v1 : next++;
  }
  GraphBuilder b(n1 + g2.order() - 1);
  for (const Edge& e : g1.edges()) {
    b.add_edge(e);
  }
  for (const Edge& e : g2.edges()) {
    b.add_edge(map2[e.u], map2[e.v], e.gain);
  }
  return b.build();
}

QuartGainGraph relabel(const QuartGainGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw PreconditionError("permutation length does not match graph order");
  }
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) {
      throw PreconditionError("not a permutation");
    }
    hit[p] = true;
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    b.add_edge(perm[e.u], perm[e.v], e.gain);
  }
  return b.build();
}

QuartGainGraph disjoint_union(const QuartGainGraph& g1, const QuartGainGraph& g2) {
  const std::size_t n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (const Edge& e : g1.edges()) {
    b.add_edge(e);
  }
  for (const Edge& e : g2.edges()) {
    b.add_edge(e.u + n1, e.v + n1, e.gain);
  }
  return b.build();
}

QuartGainGraph complement(const QuartGainGraph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        b.add_edge(u, v);
      }
    }
  }
  return b.build();
}

}  // namespace hermitia
