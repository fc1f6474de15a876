#include "hermitia/classify.hpp"

#include <algorithm>
#include <json.hpp>

#include "hermitia/errors.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/switching.hpp"
#include "hermitia/twins.hpp"
#include "hermitia/families.hpp"

namespace hermitia {

std::optional<std::vector<VertexSet>> multipartite_classes(const QuartGainGraph& g) {
  std::vector<std::vector<Vertex>> classes;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto home = std::find_if(classes.begin(), classes.end(),
                             [&](const std::vector<Vertex>& c) { return !g.adjacent(u, c.front()); });
    if (home == classes.end()) {
      classes.push_back({u});
    } else {
      home->push_back(u);
    }
  }
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (std::size_t y = x; y < classes.size(); ++y) {
      for (Vertex u : classes[x]) {
        for (Vertex w : classes[y]) {
          if (u != w && g.adjacent(u, w) == (x == y)) {
            return std::nullopt;
          }
        }
      }
    }
  }
  std::vector<VertexSet> out;
  for (auto& c : classes) {
    out.emplace_back(std::move(c));
  }
  return out;
}

std::string_view to_string(P1Tag tag) { return tag == P1Tag::multipartite ? "multipartite" : "c3t"; }

std::optional<P1Tag> p1_characterize(const QuartGainGraph& g) {
  const QuartGainGraph f = induced_subgraph(g, non_isolated_vertices(g));
  if (f.order() == 0) {
    return std::nullopt;
  }
  const auto classes = multipartite_classes(f);
  if (!classes) {
    return std::nullopt;
  }
  if (is_positive(f)) {
    return P1Tag::multipartite;
  }
  if (classes->size() == 3 && is_odd_triangle(twin_reduction(f))) {
    return P1Tag::c3t;
  }
  return std::nullopt;
}

std::string_view to_string(Case c) {
  switch (c) {
    case Case::thm12_i:
      return "thm12_i";
    case Case::thm12_ii:
      return "thm12_ii";
    case Case::thm12_iii:
      return "thm12_iii";
    case Case::thm12_iv:
      return "thm12_iv";
    case Case::thm11:
      return "thm11";
    case Case::p1_multipartite:
      return "p1_multipartite";
    case Case::p1_c3t:
      return "p1_c3t";
  }
  return "unknown";
}

bool ClassificationResult::has(Case c) const { return find(c) != nullptr; }

const CaseMatch* ClassificationResult::find(Case c) const {
  for (const CaseMatch& m : matches) {
    if (m.kind == c) {
      return &m;
    }
  }
  return nullptr;
}

namespace {

nlohmann::json param_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json theta = nlohmann::json::array();
  for (Unit t : w.theta.theta) {
    theta.push_back(std::string(t.token()));
  }
  return {{"perm", w.perm}, {"theta", theta}, {"converse", w.converse}};
}

}  // namespace

std::string ClassificationResult::to_json() const {
  nlohmann::json cases = nlohmann::json::array();
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json witness = nullptr;
  for (const CaseMatch& m : matches) {
    const std::string name(to_string(m.kind));
    cases.push_back(name);
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [key, value] : m.params) {
      p[key] = param_json(value);
    }
    params[name] = p;
    if (m.witness && witness.is_null()) {
      witness = witness_json(*m.witness);
      witness["case"] = name;
    }
  }
  return nlohmann::json{{"cases", cases}, {"params", params}, {"witness", witness}}.dump();
}

namespace {

std::vector<long> to_longs(const std::vector<std::size_t>& xs) { return {xs.begin(), xs.end()}; }
std::vector<long> to_longs(const VertexSet& xs) { return {xs.begin(), xs.end()}; }

std::vector<std::size_t> class_sizes(const std::vector<VertexSet>& classes) {
  std::vector<std::size_t> out;
  for (const VertexSet& c : classes) {
    out.push_back(c.size());
  }
  return out;
}

VertexSet with(const VertexSet& s, Vertex v) {
  std::vector<Vertex> ids = s.ids();
  ids.push_back(v);
  return VertexSet(std::move(ids));
}

VertexSet lift(const VertexSet& host, const VertexSet& local) {
  std::vector<Vertex> ids;
  for (Vertex u : local) {
    ids.push_back(host[u]);
  }
  return VertexSet(std::move(ids));
}

// Multipartite classes of G[s], in G's ids.
std::optional<std::vector<VertexSet>> classes_within(const QuartGainGraph& g, const VertexSet& s) {
  auto local = multipartite_classes(induced_subgraph(g, s));
  if (!local) {
    return std::nullopt;
  }
  for (VertexSet& c : *local) {
    c = lift(s, c);
  }
  return local;
}

bool is_star_shape(const std::vector<VertexSet>& classes) {
  return classes.size() == 2 && (classes[0].size() == 1 || classes[1].size() == 1);
}

// Writes the normalizing switch of G[s] into theta (G ids). The switch is
// scaled so that `anchor` gets 1 when it lies in s.
void normalize_part(const QuartGainGraph& g, const VertexSet& s, std::optional<Vertex> anchor,
                    SwitchAssignment& theta) {
  const Normalized local = tree_normalize(induced_subgraph(g, s));
  Unit scale = Unit::one();
  if (anchor) {
    scale = local.theta[s.index_of(*anchor)].conj();
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    theta.theta[s[j]] = local.theta[j] * scale;
  }
}

std::optional<Witness> family_witness(const QuartGainGraph& family_graph, const std::vector<Vertex>& perm,
                                      const QuartGainGraph& g) {
  auto w = equivalence_witness(relabel(family_graph, perm), g);
  if (w) {
    w->perm = perm;
  }
  return w;
}

void add_unique(ClassificationResult& result, CaseMatch match) {
  if (!result.has(match.kind)) {
    result.matches.push_back(std::move(match));
  }
}

void sort_matches(ClassificationResult& result) {
  std::stable_sort(result.matches.begin(), result.matches.end(),
                   [](const CaseMatch& x, const CaseMatch& y) { return x.kind < y.kind; });
}

void try_case_i(const QuartGainGraph& g, Vertex v, const VertexSet& c1, const VertexSet& c2,
                ClassificationResult& result) {
  const VertexSet sides[2] = {with(c1, v), with(c2, v)};
  std::vector<std::size_t> sizes[2];
  P1Tag tags[2];
  for (int j = 0; j < 2; ++j) {
    const auto classes = classes_within(g, sides[j]);
    if (!classes || is_star_shape(*classes)) {
      return;
    }
    const auto tag = p1_characterize(induced_subgraph(g, sides[j]));
    if (!tag) {
      return;
    }
    sizes[j] = class_sizes(*classes);
    tags[j] = *tag;
  }
  CaseMatch m{Case::thm12_i, {}, std::nullopt};
  m.params["cut_vertex"] = static_cast<long>(v);
  m.params["side1"] = to_longs(sides[0]);
  m.params["side2"] = to_longs(sides[1]);
  m.params["sizes1"] = to_longs(sizes[0]);
  m.params["sizes2"] = to_longs(sizes[1]);
  m.params["type1"] = std::string(to_string(tags[0]));
  m.params["type2"] = std::string(to_string(tags[1]));
  add_unique(result, std::move(m));
}

// q-side Q (v sees all of it) and n-side N (v sees whole classes).
void try_join_cases(const QuartGainGraph& g, Vertex v, const VertexSet& q_side, const VertexSet& n_side,
                    ClassificationResult& result) {
  for (Vertex u : q_side) {
    if (!g.adjacent(v, u)) {
      return;
    }
  }
  const auto q_classes = classes_within(g, q_side);
  const auto n_classes = classes_within(g, n_side);
  if (!q_classes || !n_classes || q_classes->size() < 2 || n_classes->size() < 2) {
    return;
  }
  const VertexSet s_q = with(q_side, v);
  if (!is_positive(induced_subgraph(g, s_q)) || !is_positive(induced_subgraph(g, n_side))) {
    return;
  }
  SwitchAssignment theta = SwitchAssignment::identity(g.order());
  normalize_part(g, s_q, v, theta);
  normalize_part(g, n_side, std::nullopt, theta);
  const QuartGainGraph h = apply_switch(g, theta);

  // Apex gain per n-class, or nullopt for classes v does not see.
  std::vector<std::optional<Unit>> apex(n_classes->size());
  for (std::size_t j = 0; j < n_classes->size(); ++j) {
    const VertexSet& cls = (*n_classes)[j];
    const auto first = h.gain(v, cls.front());
    for (Vertex u : cls) {
      if (h.gain(v, u) != first) {
        return;
      }
    }
    apex[j] = first;
  }
  std::vector<Unit> values;
  for (const auto& a : apex) {
    if (a && std::find(values.begin(), values.end(), *a) == values.end()) {
      values.push_back(*a);
    }
  }
  const int r = static_cast<int>(q_classes->size());
  const int k = static_cast<int>(n_classes->size());

  auto classes_with = [&](Unit value) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < apex.size(); ++j) {
      if (apex[j] == value) {
        idx.push_back(j);
      }
    }
    return idx;
  };
  std::vector<std::size_t> unseen;
  for (std::size_t j = 0; j < apex.size(); ++j) {
    if (!apex[j]) {
      unseen.push_back(j);
    }
  }

  // Family vertex order: apex, q-classes, then the n-classes in `order`.
  auto make_perm = [&](const std::vector<std::size_t>& order) {
    std::vector<Vertex> perm;
    perm.push_back(v);
    for (const VertexSet& c : *q_classes) {
      perm.insert(perm.end(), c.begin(), c.end());
    }
    for (std::size_t j : order) {
      perm.insert(perm.end(), (*n_classes)[j].begin(), (*n_classes)[j].end());
    }
    return perm;
  };
  auto sizes_in = [&](const std::vector<std::size_t>& order) {
    std::vector<std::size_t> out;
    for (std::size_t j : order) {
      out.push_back((*n_classes)[j].size());
    }
    return out;
  };
  const std::vector<std::size_t> q_sizes = class_sizes(*q_classes);

  auto base_params = [&](CaseMatch& m, const std::vector<std::size_t>& n_sizes) {
    m.params["cut_vertex"] = static_cast<long>(v);
    m.params["q"] = to_longs(q_sizes);
    m.params["n"] = to_longs(n_sizes);
    m.params["r"] = static_cast<long>(r);
    m.params["k"] = static_cast<long>(k);
    m.params["s"] = static_cast<long>(unseen.size());
  };

  if (values.size() == 1) {
    std::vector<std::size_t> order = classes_with(values[0]);
    const int p = static_cast<int>(order.size());
    const int n1 = static_cast<int>((*n_classes)[order.front()].size());
    order.insert(order.end(), unseen.begin(), unseen.end());
    const auto sub = thm12_ii_case(r, k, p, n1);
    if (!sub) {
      return;
    }
    const auto n_sizes = sizes_in(order);
    auto w = family_witness(gen_K_plain(q_sizes, n_sizes, static_cast<std::size_t>(p)), make_perm(order), g);
    if (!w) {
      return;
    }
    CaseMatch m{Case::thm12_ii, {}, std::move(w)};
    base_params(m, n_sizes);
    m.params["p"] = static_cast<long>(p);
    m.params["subcase"] = static_cast<long>(*sub);
    add_unique(result, std::move(m));
    return;
  }
  if (values.size() != 2) {
    return;
  }
  auto first = classes_with(values[0]);
  auto second = classes_with(values[1]);
  if (first.size() < second.size()) {
    std::swap(first, second);
  }
  const int big = static_cast<int>(first.size());
  const int small = static_cast<int>(second.size());
  std::vector<std::size_t> order = first;
  order.insert(order.end(), second.begin(), second.end());
  order.insert(order.end(), unseen.begin(), unseen.end());
  const auto n_sizes = sizes_in(order);
  const Unit ratio = values[0] * values[1].conj();

  if (ratio == Unit::minus_one()) {
    if (!thm12_iii_condition(r, k, big, small)) {
      return;
    }
    auto w = family_witness(gen_K_gain(q_sizes, n_sizes, big, small, 0, 0), make_perm(order), g);
    if (!w) {
      return;
    }
    CaseMatch m{Case::thm12_iii, {}, std::move(w)};
    base_params(m, n_sizes);
    m.params["a"] = static_cast<long>(big);
    m.params["b"] = static_cast<long>(small);
    add_unique(result, std::move(m));
    return;
  }
  const auto sub = thm12_iv_case(r, k, big, small);
  if (!sub) {
    return;
  }
  auto w = family_witness(gen_K_gain(q_sizes, n_sizes, big, 0, small, 0), make_perm(order), g);
  if (!w) {
    return;
  }
  CaseMatch m{Case::thm12_iv, {}, std::move(w)};
  base_params(m, n_sizes);
  m.params["a"] = static_cast<long>(big);
  m.params["c"] = static_cast<long>(small);
  m.params["subcase"] = static_cast<long>(*sub);
  add_unique(result, std::move(m));
}

}  // namespace

std::optional<ClassificationResult> thm11_classify(const QuartGainGraph& g) {
  if (!is_connected(g) || pendant_vertices(g).empty()) {
    throw PreconditionError("thm11_classify: need a connected graph with a pendant vertex");
  }
  for (Vertex v1 : pendant_vertices(g)) {
    const Vertex v2 = g.neighbors(v1).front();
    std::vector<Vertex> rest_ids;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u != v1 && u != v2) {
        rest_ids.push_back(u);
      }
    }
    const VertexSet rest(std::move(rest_ids));
    const QuartGainGraph h = induced_subgraph(g, rest);
    const VertexSet f_local = non_isolated_vertices(h);
    const auto tag = p1_characterize(h);
    if (!tag) {
      continue;
    }
    const VertexSet f = lift(rest, f_local);
    std::vector<long> leaves;
    for (Vertex u : rest) {
      if (!f.contains(u)) {
        leaves.push_back(static_cast<long>(u));
      }
    }
    leaves.push_back(static_cast<long>(v1));
    std::sort(leaves.begin(), leaves.end());
    CaseMatch m{Case::thm11, {}, std::nullopt};
    m.params["pendant"] = static_cast<long>(v1);
    m.params["center"] = static_cast<long>(v2);
    m.params["leaves"] = leaves;
    m.params["F"] = to_longs(f);
    m.params["F_type"] = std::string(to_string(*tag));
    ClassificationResult out;
    out.matches.push_back(std::move(m));
    return out;
  }
  return std::nullopt;
}

ClassificationResult thm12_classify(const QuartGainGraph& g) {
  if (!is_connected(g) || cut_vertices(g).empty() || !pendant_vertices(g).empty()) {
    throw PreconditionError("thm12_classify: need a connected graph with a cut vertex and no pendant vertex");
  }
  ClassificationResult result;
  for (Vertex v : cut_vertices(g)) {
    const QuartGainGraph rest = delete_vertex(g, v);
    const auto parts = components(rest);
    if (parts.size() != 2) {
      continue;
    }
    std::vector<Vertex> others;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u != v) {
        others.push_back(u);
      }
    }
    const VertexSet host(std::move(others));
    const VertexSet c1 = lift(host, parts[0]);
    const VertexSet c2 = lift(host, parts[1]);
    try_case_i(g, v, c1, c2, result);
    try_join_cases(g, v, c1, c2, result);
    try_join_cases(g, v, c2, c1, result);
  }
  sort_matches(result);
  return result;
}

ClassificationResult classify(const QuartGainGraph& g) {
  ClassificationResult result;
  if (const auto tag = p1_characterize(g)) {
    const QuartGainGraph f = induced_subgraph(g, non_isolated_vertices(g));
    CaseMatch m{*tag == P1Tag::multipartite ? Case::p1_multipartite : Case::p1_c3t, {}, std::nullopt};
    m.params["sizes"] = to_longs(class_sizes(*multipartite_classes(f)));
    m.params["vertices"] = to_longs(non_isolated_vertices(g));
    result.matches.push_back(std::move(m));
  }
  if (g.order() > 0 && is_connected(g)) {
    if (!pendant_vertices(g).empty()) {
      if (auto r = thm11_classify(g)) {
        for (CaseMatch& m : r->matches) {
          add_unique(result, std::move(m));
        }
      }
    } else if (!cut_vertices(g).empty()) {
      for (CaseMatch& m : thm12_classify(g).matches) {
        add_unique(result, std::move(m));
      }
    }
  }
  sort_matches(result);
  return result;
}

bool lem311_check(const QuartGainGraph& f1, const QuartGainGraph& f2, Vertex v) {
  if (f2.order() != f1.order() + 1 || v >= f2.order() || delete_vertex(f2, v) != f1) {
    throw HypothesisError("lem311_check: f2 minus v is not f1");
  }
  if (!is_connected(f1)) {
    throw HypothesisError("lem311_check: f1 is not connected");
  }
  const InertiaTriple in1 = inertia(f1);
  const InertiaTriple in2 = inertia(f2);
  if (in1.p != 1) {
    throw HypothesisError("lem311_check: p(f1) = " + std::to_string(in1.p) + ", expected 1");
  }
  if (in2.rank() != in1.rank() + 1) {
    throw HypothesisError("lem311_check: rk(f2) = " + std::to_string(in2.rank()) + ", rk(f1) = " +
                          std::to_string(in1.rank()));
  }
  if (in2.p != 2) {
    throw HypothesisError("lem311_check: p(f2) = " + std::to_string(in2.p) + ", expected 2");
  }

  const auto classes = multipartite_classes(f1);
  if (!classes || !is_positive(f1)) {
    return false;
  }
  auto up = [v](Vertex u) { return u < v ? u : u + 1; };
  const Normalized norm = tree_normalize(f1);
  SwitchAssignment theta = SwitchAssignment::identity(f2.order());
  for (Vertex u = 0; u < f1.order(); ++u) {
    theta.theta[up(u)] = norm.theta[u];
  }
  const QuartGainGraph h = apply_switch(f2, theta);
  for (const VertexSet& cls : *classes) {
    const auto first = h.gain(v, up(cls.front()));
    for (Vertex u : cls) {
      if (h.gain(v, up(u)) != first) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hermitia
