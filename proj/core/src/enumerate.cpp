#include "hermitia/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>

#include "hermitia/errors.hpp"

namespace hermitia {

namespace {

// Bit for pair (i, j), i < j, with (0, 1) most significant.
std::uint64_t pair_bit(std::size_t n, std::size_t i, std::size_t j) {
  std::size_t index = 0;
  for (std::size_t x = 0; x < i; ++x) {
    index += n - 1 - x;
  }
  index += j - i - 1;
  const std::size_t pairs = n * (n - 1) / 2;
  return std::uint64_t{1} << (pairs - 1 - index);
}

struct Canon {
  std::uint64_t key = 0;
  std::vector<Vertex> position;  // position[u] = new label of u
};

Canon canonicalize(const QuartGainGraph& g) {
  const std::size_t n = g.order();
  if (n > 11) {
    throw SizeLimitError("canonical labeling limited to 11 vertices");
  }
  std::vector<Vertex> by_degree(n);
  for (Vertex u = 0; u < n; ++u) {
    by_degree[u] = u;
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Blocks of equal degree; labels within a block are permuted freely.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(by_degree[j]) == g.degree(by_degree[i])) {
      ++j;
    }
    blocks.emplace_back(i, j);
    std::sort(by_degree.begin() + static_cast<long>(i), by_degree.begin() + static_cast<long>(j));
    i = j;
  }

  Canon best;
  bool have = false;
  std::vector<Vertex> order = by_degree;  // order[label] = vertex
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] = adj[e.v][e.u] = true;
  }
  auto score = [&] {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (adj[order[i]][order[j]]) {
          key |= pair_bit(n, i, j);
        }
      }
    }
    return key;
  };
  std::function<void(std::size_t)> walk = [&](std::size_t b) {
    if (b == blocks.size()) {
      const std::uint64_t key = score();
      if (!have || key > best.key) {
        have = true;
        best.key = key;
        best.position.assign(n, 0);
        for (std::size_t label = 0; label < n; ++label) {
          best.position[order[label]] = label;
        }
      }
      return;
    }
    const auto first = order.begin() + static_cast<long>(blocks[b].first);
    const auto last = order.begin() + static_cast<long>(blocks[b].second);
    std::sort(first, last);
    do {
      walk(b + 1);
    } while (std::next_permutation(first, last));
  };
  walk(0);
  if (!have) {
    best.position.clear();
  }
  return best;
}

bool passes_structure(const QuartGainGraph& u, const EnumFilters& f) {
  if (f.connected && !is_connected(u)) {
    return false;
  }
  if (f.has_cut_vertex && cut_vertices(u).empty()) {
    return false;
  }
  const bool pendant = !pendant_vertices(u).empty();
  if (f.no_pendant && pendant) {
    return false;
  }
  if (f.has_pendant && !pendant) {
    return false;
  }
  return true;
}

// BFS order and tree edges matching tree_normalize.
struct Forest {
  std::vector<Vertex> order;
  std::vector<bool> is_root;
  std::vector<std::pair<Vertex, Vertex>> non_tree;  // u < v, sorted
};

Forest bfs_forest(const QuartGainGraph& g) {
  const std::size_t n = g.order();
  Forest out;
  out.is_root.assign(n, false);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(n, false));
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) {
      continue;
    }
    seen[root] = true;
    out.is_root[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex p = queue.front();
      queue.pop_front();
      out.order.push_back(p);
      for (Vertex c : g.neighbors(p)) {
        if (!seen[c]) {
          seen[c] = true;
          tree[p][c] = tree[c][p] = true;
          queue.push_back(c);
        }
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (!tree[e.u][e.v]) {
      out.non_tree.emplace_back(e.u, e.v);
    }
  }
  return out;
}

}  // namespace

std::uint64_t canonical_key(const QuartGainGraph& g) { return canonicalize(g).key; }

QuartGainGraph canonical_underlying(const QuartGainGraph& g) {
  const Canon c = canonicalize(g);
  return relabel(underlying(g), c.position);
}

namespace {

using UnderlyingMemo = std::map<std::size_t, std::vector<QuartGainGraph>>;

const std::vector<QuartGainGraph>& build_underlying(std::size_t n, UnderlyingMemo& memo) {
  if (auto it = memo.find(n); it != memo.end()) {
    return it->second;
  }
  std::vector<QuartGainGraph> out;
  if (n <= 1) {
    out.emplace_back(n);
  } else {
    // Extend each graph on n-1 vertices by a new vertex with every possible
    // neighborhood and keep one graph per canonical key.
    std::map<std::uint64_t, QuartGainGraph> found;
    for (const QuartGainGraph& base : build_underlying(n - 1, memo)) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        GraphBuilder b(n);
        for (const Edge& e : base.edges()) {
          b.add_edge(e.u, e.v);
        }
        for (Vertex u = 0; u + 1 < n; ++u) {
          if (mask & (std::uint64_t{1} << u)) {
            b.add_edge(u, n - 1);
          }
        }
        const QuartGainGraph g = b.build();
        const Canon c = canonicalize(g);
        if (!found.count(c.key)) {
          found.emplace(c.key, relabel(g, c.position));
        }
      }
    }
    for (auto& entry : found) {
      out.push_back(std::move(entry.second));
    }
  }
  return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<QuartGainGraph> underlying_graphs(std::size_t n) {
  static UnderlyingMemo memo;
  static std::mutex memo_mutex;
  const std::lock_guard<std::mutex> lock(memo_mutex);
  return build_underlying(n, memo);
}

std::optional<SwitchAssignment> mixed_representative(const QuartGainGraph& g) {
  const Forest forest = bfs_forest(g);
  const std::size_t n = g.order();
  SwitchAssignment theta = SwitchAssignment::identity(n);
  std::vector<bool> assigned(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == forest.order.size()) {
      return true;
    }
    const Vertex u = forest.order[idx];
    for (Unit t : kAllUnits) {
      if (forest.is_root[u] && t != Unit::one()) {
        continue;
      }
      bool ok = true;
      for (Vertex w : g.neighbors(u)) {
        if (assigned[w] && t.conj() * *g.gain(u, w) * theta[w] == Unit::minus_one()) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        continue;
      }
      theta.theta[u] = t;
      assigned[u] = true;
      if (place(idx + 1)) {
        return true;
      }
      assigned[u] = false;
    }
    return false;
  };
  if (!place(0)) {
    return std::nullopt;
  }
  return theta;
}

std::size_t enumerate_switching_classes(const EnumSpec& spec,
                                        const std::function<bool(const QuartGainGraph&)>& emit) {
  if (spec.n < 1) {
    throw PreconditionError("enumeration needs n >= 1");
  }
  if (spec.n > spec.cap) {
    throw SizeLimitError("enumeration order " + std::to_string(spec.n) + " exceeds cap " + std::to_string(spec.cap));
  }
  const std::size_t lo = spec.min_n.value_or(spec.n);
  if (lo < 1 || lo > spec.n) {
    throw PreconditionError("enumeration needs 1 <= min_n <= n");
  }
  std::size_t emitted = 0;
  for (std::size_t order = lo; order <= spec.n; ++order) {
    for (const QuartGainGraph& u : underlying_graphs(order)) {
      if (!passes_structure(u, spec.filters)) {
        continue;
      }
      const Forest forest = bfs_forest(u);
      const std::size_t extra = forest.non_tree.size();
      const std::uint64_t classes = std::uint64_t{1} << (2 * extra);
      for (std::uint64_t code = 0; code < classes; ++code) {
        GraphBuilder b(order);
        std::vector<std::vector<bool>> is_extra(order, std::vector<bool>(order, false));
        for (std::size_t j = 0; j < extra; ++j) {
          const auto [x, y] = forest.non_tree[j];
          const int digit = static_cast<int>((code >> (2 * (extra - 1 - j))) & 3U);
          b.add_edge(x, y, Unit::from_power(digit));
          is_extra[x][y] = true;
        }
        for (const Edge& e : u.edges()) {
          if (!is_extra[e.u][e.v]) {
            b.add_edge(e.u, e.v);
          }
        }
        QuartGainGraph g = b.build();
        if (spec.filters.mixed_only) {
          const auto theta = mixed_representative(g);
          if (!theta) {
            continue;
          }
          g = apply_switch(g, *theta);
        }
        if (spec.limit && emitted >= *spec.limit) {
          return emitted;
        }
        ++emitted;
        if (!emit(g)) {
          return emitted;
        }
      }
    }
  }
  return emitted;
}

std::vector<QuartGainGraph> enumerate_switching_classes(const EnumSpec& spec) {
  std::vector<QuartGainGraph> out;
  enumerate_switching_classes(spec, [&out](const QuartGainGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace hermitia
