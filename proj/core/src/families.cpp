#include "hermitia/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hermitia/errors.hpp"

namespace hermitia {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw PreconditionError(message);
  }
}

// Adds the complete multipartite graph on consecutive blocks starting at
// `offset`; returns the block start positions.
std::vector<Vertex> add_multipartite(GraphBuilder& b, Vertex offset, const std::vector<std::size_t>& sizes) {
  std::vector<Vertex> starts;
  Vertex next = offset;
  for (std::size_t s : sizes) {
    starts.push_back(next);
    next += s;
  }
  for (std::size_t x = 0; x < sizes.size(); ++x) {
    for (std::size_t y = x + 1; y < sizes.size(); ++y) {
      for (Vertex u = starts[x]; u < starts[x] + sizes[x]; ++u) {
        for (Vertex w = starts[y]; w < starts[y] + sizes[y]; ++w) {
          b.add_edge(u, w);
        }
      }
    }
  }
  return starts;
}

std::size_t total(const std::vector<std::size_t>& sizes) { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

void check_sizes(const std::vector<std::size_t>& sizes, const char* what) {
  require(std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s >= 1; }),
          std::string(what) + ": part sizes must be at least 1");
}

}  // namespace

QuartGainGraph gen_c3t(std::size_t t1, std::size_t t2, std::size_t t3) {
  require(t1 >= 1 && t2 >= 1 && t3 >= 1, "c3t: part sizes must be at least 1");
  GraphBuilder b(t1 + t2 + t3);
  const Vertex a0 = 0, b0 = t1, c0 = t1 + t2, end = t1 + t2 + t3;
  for (Vertex a = a0; a < b0; ++a) {
    for (Vertex x = b0; x < c0; ++x) {
      b.add_edge(a, x, Unit::i());
    }
  }
  for (Vertex x = b0; x < c0; ++x) {
    for (Vertex c = c0; c < end; ++c) {
      b.add_edge(x, c, Unit::i());
    }
  }
  for (Vertex c = c0; c < end; ++c) {
    for (Vertex a = a0; a < b0; ++a) {
      b.add_edge(c, a, Unit::i());
    }
  }
  return b.build();
}

QuartGainGraph gen_complete_multipartite(const std::vector<std::size_t>& sizes) {
  require(!sizes.empty(), "complete multipartite: need at least one part");
  check_sizes(sizes, "complete multipartite");
  GraphBuilder b(total(sizes));
  add_multipartite(b, 0, sizes);
  return b.build();
}

QuartGainGraph gen_star(std::size_t n) {
  require(n >= 2, "star: need at least 2 vertices");
  GraphBuilder b(n);
  for (Vertex u = 1; u < n; ++u) {
    b.add_edge(0, u);
  }
  return b.build();
}

QuartGainGraph gen_cycle(std::size_t n, const std::vector<std::size_t>& arcs) {
  require(n >= 3, "cycle: need at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex j = 0; j < n; ++j) {
    const bool arc = std::find(arcs.begin(), arcs.end(), j) != arcs.end();
    b.add_edge(j, (j + 1) % n, arc ? Unit::i() : Unit::one());
  }
  for (std::size_t j : arcs) {
    require(j < n, "cycle: arc position out of range");
  }
  return b.build();
}

namespace {

QuartGainGraph build_K(const std::vector<std::size_t>& q, const std::vector<std::size_t>& n,
                       const std::vector<Unit>& apex_gains) {
  check_sizes(q, "K: q");
  check_sizes(n, "K: n");
  GraphBuilder b(1 + total(q) + total(n));
  add_multipartite(b, 1, q);
  const auto n_starts = add_multipartite(b, 1 + total(q), n);
  for (Vertex u = 1; u <= total(q); ++u) {
    b.add_edge(0, u);
  }
  for (std::size_t j = 0; j < apex_gains.size(); ++j) {
    for (Vertex u = n_starts[j]; u < n_starts[j] + n[j]; ++u) {
      b.add_edge(0, u, apex_gains[j]);
    }
  }
  return b.build();
}

}  // namespace

QuartGainGraph gen_K_plain(const std::vector<std::size_t>& q, const std::vector<std::size_t>& n, std::size_t p) {
  require(p >= 1 && p <= n.size(), "K: need 1 <= p <= k");
  return build_K(q, n, std::vector<Unit>(p, Unit::one()));
}

QuartGainGraph gen_K_gain(const std::vector<std::size_t>& q, const std::vector<std::size_t>& n, std::size_t a,
                          std::size_t b, std::size_t c, std::size_t d) {
  const std::size_t adj = a + b + c + d;
  require(adj >= 1 && adj <= n.size(), "K: need 1 <= a+b+c+d <= k");
  std::vector<Unit> gains;
  gains.insert(gains.end(), a, Unit::i());
  gains.insert(gains.end(), b, Unit::minus_i());
  gains.insert(gains.end(), c, Unit::one());
  gains.insert(gains.end(), d, Unit::minus_one());
  return build_K(q, n, gains);
}

// -- spec text --------------------------------------------------------------

namespace family {

bool operator==(const Coalescence& x, const Coalescence& y) {
  auto same = [](const std::shared_ptr<const FamilySpec>& l, const std::shared_ptr<const FamilySpec>& r) {
    return l == r || (l && r && *l == *r);
  };
  return x.v1 == y.v1 && x.v2 == y.v2 && same(x.left, y.left) && same(x.right, y.right);
}

}  // namespace family

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(1, message); }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

std::size_t parse_uint(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::size_t> parse_list(std::string_view s) {
  if (s.empty()) {
    throw ParseError(1, "empty list");
  }
  std::vector<std::size_t> out;
  for (std::string_view item : split(s, ',')) {
    out.push_back(parse_uint(item));
  }
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    out += (j ? "," : "") + std::to_string(xs[j]);
  }
  return out;
}

FamilySpec parse_K(std::string_view body) {
  std::optional<std::vector<std::size_t>> q, n;
  std::optional<std::size_t> p, a, b, c, d;
  for (std::string_view part : split(body, ';')) {
    if (part.starts_with("q=")) {
      const auto list = part.substr(2);
      q = (list.empty() || list == "0") ? std::vector<std::size_t>{} : parse_list(list);
      continue;
    }
    if (part.starts_with("n=")) {
      n = parse_list(part.substr(2));
      continue;
    }
    for (std::string_view kv : split(part, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) {
        fail("expected key=value in '" + std::string(kv) + "'");
      }
      const std::string_view key = kv.substr(0, eq);
      const std::size_t value = parse_uint(kv.substr(eq + 1));
      auto& slot = key == "p" ? p : key == "a" ? a : key == "b" ? b : key == "c" ? c : key == "d" ? d : p;
      if ((key != "p" && key != "a" && key != "b" && key != "c" && key != "d") || slot) {
        fail("unexpected or repeated key '" + std::string(key) + "'");
      }
      slot = value;
    }
  }
  if (!q || !n) {
    fail("K spec needs both q= and n=");
  }
  const bool gain_form = a || b || c || d;
  if (p && gain_form) {
    fail("K spec mixes p= with a=,b=,c=,d=");
  }
  if (p) {
    return {family::KPlain{*q, *n, *p}};
  }
  if (!gain_form) {
    fail("K spec needs p= or a=,b=,c=,d=");
  }
  return {family::KGain{*q, *n, a.value_or(0), b.value_or(0), c.value_or(0), d.value_or(0)}};
}

std::pair<std::shared_ptr<const FamilySpec>, Vertex> parse_anchor(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    fail("coalescence operand needs '@vertex'");
  }
  return {std::make_shared<const FamilySpec>(parse_family(text.substr(0, at))), parse_uint(text.substr(at + 1))};
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  if (text.starts_with("coal(")) {
    if (!text.ends_with(")")) {
      fail("unterminated coal(...)");
    }
    const std::string_view inner = text.substr(5, text.size() - 6);
    int depth = 0;
    std::size_t bar = std::string_view::npos;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (inner[j] == '(') {
        ++depth;
      } else if (inner[j] == ')') {
        --depth;
      } else if (inner[j] == '|' && depth == 0) {
        if (bar != std::string_view::npos) {
          fail("coal(...) takes exactly two operands");
        }
        bar = j;
      }
    }
    if (bar == std::string_view::npos || depth != 0) {
      fail("malformed coal(...)");
    }
    auto [left, v1] = parse_anchor(inner.substr(0, bar));
    auto [right, v2] = parse_anchor(inner.substr(bar + 1));
    return {family::Coalescence{left, v1, right, v2}};
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail("family spec needs 'kind:params', got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "c3t") {
    const auto t = parse_list(body);
    if (t.size() != 3) {
      fail("c3t takes three sizes");
    }
    return {family::C3t{t[0], t[1], t[2]}};
  }
  if (kind == "cm") {
    return {family::Multipartite{parse_list(body)}};
  }
  if (kind == "star") {
    return {family::Star{parse_uint(body)}};
  }
  if (kind == "cycle") {
    const auto parts = split(body, ';');
    family::Cycle cyc{parse_uint(parts[0]), {}};
    if (parts.size() > 2 || (parts.size() == 2 && !parts[1].starts_with("arcs="))) {
      fail("cycle spec is cycle:N or cycle:N;arcs=...");
    }
    if (parts.size() == 2) {
      cyc.arcs = parse_list(parts[1].substr(5));
    }
    return {cyc};
  }
  if (kind == "K") {
    return parse_K(body);
  }
  fail("unknown family '" + std::string(kind) + "'");
}

std::string print_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::C3t>) {
          return "c3t:" + join({f.t1, f.t2, f.t3});
        } else if constexpr (std::is_same_v<T, family::Multipartite>) {
          return "cm:" + join(f.sizes);
        } else if constexpr (std::is_same_v<T, family::Star>) {
          return "star:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, family::Cycle>) {
          return "cycle:" + std::to_string(f.n) + (f.arcs.empty() ? "" : ";arcs=" + join(f.arcs));
        } else if constexpr (std::is_same_v<T, family::KPlain>) {
          return "K:q=" + (f.q.empty() ? std::string("0") : join(f.q)) + ";n=" + join(f.n) + ";p=" + std::to_string(f.p);
        } else if constexpr (std::is_same_v<T, family::KGain>) {
          return "K:q=" + (f.q.empty() ? std::string("0") : join(f.q)) + ";n=" + join(f.n) + ";a=" + std::to_string(f.a) +
                 ",b=" + std::to_string(f.b) + ",c=" + std::to_string(f.c) + ",d=" + std::to_string(f.d);
        } else {
          return "coal(" + print_family(*f.left) + "@" + std::to_string(f.v1) + "|" + print_family(*f.right) + "@" +
                 std::to_string(f.v2) + ")";
        }
      },
      spec.value);
}

QuartGainGraph realize(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> QuartGainGraph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::C3t>) {
          return gen_c3t(f.t1, f.t2, f.t3);
        } else if constexpr (std::is_same_v<T, family::Multipartite>) {
          return gen_complete_multipartite(f.sizes);
        } else if constexpr (std::is_same_v<T, family::Star>) {
          return gen_star(f.n);
        } else if constexpr (std::is_same_v<T, family::Cycle>) {
          return gen_cycle(f.n, f.arcs);
        } else if constexpr (std::is_same_v<T, family::KPlain>) {
          return gen_K_plain(f.q, f.n, f.p);
        } else if constexpr (std::is_same_v<T, family::KGain>) {
          return gen_K_gain(f.q, f.n, f.a, f.b, f.c, f.d);
        } else {
          if (!f.left || !f.right) {
            throw PreconditionError("coalescence spec is missing an operand");
          }
          return coalesce(realize(*f.left), f.v1, realize(*f.right), f.v2);
        }
      },
      spec.value);
}

}  // namespace hermitia
