// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hermitia/classify.hpp"
#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/suites.hpp"
#include "hermitia/switching.hpp"
#include "oracles.hpp"

namespace {

using namespace hermitia;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      detail = what;
    }
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const SuiteReport& r) {
  return r.suite + " checked=" + std::to_string(r.checked) + " failures=" + std::to_string(r.failures.size());
}

void suite_clean(Verdict& v, const SuiteReport& r, std::string& notes) {
  v.require(r.passed(), summary(r) + (r.failures.empty() ? "" : " first: " + r.failures.front().expected +
                                                                     " got " + r.failures.front().got));
  notes += (notes.empty() ? "" : "; ") + summary(r);
}

std::vector<std::size_t> ones(int k) { return std::vector<std::size_t>(static_cast<std::size_t>(k), 1); }

Verdict criterion1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport r = verify_suite("oracle_agreement");
  const double secs = seconds_since(t0);
  v.require(r.checked >= 10000, "fewer than 10000 graphs");
  v.require(r.passed(), summary(r));
  v.require(secs < 60, "took " + std::to_string(secs) + " s");
  v.detail = v.ok ? summary(r) + " in " + std::to_string(static_cast<int>(secs)) + " s" : v.detail;
  return v;
}

int table_eta(int n, int sigma) {
  if (n % 2 != 0) {
    return sigma % 2 != 0 ? 1 : 0;
  }
  if (sigma % 2 != 0) {
    return 0;
  }
  return ((n + sigma) % 4 + 4) % 4 == 0 ? 2 : 0;
}

Verdict criterion2() {
  Verdict v;
  std::string notes;
  suite_clean(v, verify_suite("cycle_nullity"), notes);
  // Every placement of forward arcs, backward arcs and edges for n <= 9.
  std::size_t cycles = 0;
  for (int n = 3; n <= 9; ++n) {
    std::vector<Vertex> walk(static_cast<std::size_t>(n));
    std::iota(walk.begin(), walk.end(), Vertex{0});
    int total = 1;
    for (int j = 0; j < n; ++j) {
      total *= 3;
    }
    for (int code = 0; code < total; ++code) {
      GraphBuilder b(static_cast<std::size_t>(n));
      int rest = code;
      for (int j = 0; j < n; ++j, rest /= 3) {
        static constexpr Unit kChoice[] = {Unit::one(), Unit::i(), Unit::minus_i()};
        b.add_edge(static_cast<Vertex>(j), static_cast<Vertex>((j + 1) % n), kChoice[rest % 3]);
      }
      const QuartGainGraph c = b.build();
      const int sigma = cycle_signature(c, walk);
      v.require(inertia(c).eta == table_eta(n, sigma), serialize_graph(c));
      ++cycles;
    }
  }
  v.detail = v.ok ? notes + "; exhaustive placements n<=9: " + std::to_string(cycles) : v.detail;
  return v;
}

Verdict criterion3() {
  Verdict v;
  int count = 0;
  for (std::size_t t1 = 1; t1 <= 4; ++t1) {
    for (std::size_t t2 = 1; t2 <= 4; ++t2) {
      for (std::size_t t3 = 1; t3 <= 4; ++t3) {
        const QuartGainGraph g = gen_c3t(t1, t2, t3);
        v.require(rank(g) == 2, "rank of c3t " + std::to_string(t1) + "," + std::to_string(t2) + "," +
                                    std::to_string(t3));
        v.require(oracle::charpoly_inertia(hermitian_matrix(g)).rank() == 2, "oracle rank");
        ++count;
      }
    }
  }
  v.detail = v.ok ? std::to_string(count) + " instances, rank 2" : v.detail;
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::string notes;
  for (const char* name : {"lem38", "cor39", "lem310"}) {
    const SuiteReport r = verify_suite(name);
    v.require(r.checked >= 200, std::string(name) + " checked too few");
    suite_clean(v, r, notes);
  }
  v.require(cor39_condition(3, 7, 3) && inertia(gen_K_plain(ones(3), ones(7), 3)).p == 2,
            "tie 1/r+1/p+1/(k-p-1) = 1");
  v.require(lem310_condition(4, 4, 2, 1) && inertia(gen_K_gain(ones(4), ones(4), 2, 0, 1, 0)).p == 2,
            "tie (as-1)/(a+s) = 1/(r-1)");
  v.detail = v.ok ? notes + "; boundary ties hold" : v.detail;
  return v;
}

Verdict criterion5() {
  Verdict v;
  const QuartGainGraph first = gen_K_gain({3, 2}, {3, 1}, 1, 1, 0, 0);
  v.require(inertia(first).p == 2, "p(G) != 2");
  v.require(thm12_classify(first).has(Case::thm12_iii), "G not case (iii)");
  // The second graph leaves q1..q3, n1..n3 free; n4 = 1.
  int second = 0;
  for (std::size_t q = 1; q <= 2; ++q) {
    for (std::size_t m = 1; m <= 2; ++m) {
      const QuartGainGraph g = gen_K_gain({q, 1, q + 1}, {m, 1, m + 1, 1}, 2, 0, 1, 0);
      v.require(inertia(g).p == 2, "p(G') != 2");
      const ClassificationResult r = thm12_classify(g);
      v.require(r.has(Case::thm12_iv) && std::get<long>(r.find(Case::thm12_iv)->params.at("subcase")) == 9,
                "G' not case (iv)(9)");
      ++second;
    }
  }
  v.detail = v.ok ? "p(G)=2 as case (iii); p(G')=2 as case (iv)(9) for " + std::to_string(second) + " size choices"
                  : v.detail;
  return v;
}

Verdict timed_suite(const char* name, std::size_t n, double budget) {
  Verdict v;
  SuiteOptions options;
  options.n = n;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport r = verify_suite(name, options);
  const double secs = seconds_since(t0);
  v.require(r.passed(), summary(r));
  v.require(secs < budget, "took " + std::to_string(secs) + " s");
  v.detail = v.ok ? summary(r) + " (n<=" + std::to_string(n) + ")" : v.detail;
  return v;
}

Verdict criterion7() {
  Verdict v = timed_suite("thm12", 5, 600);
  const Verdict stretch = timed_suite("thm12", 6, 600);
  v.require(stretch.ok, "n=6: " + stretch.detail);
  if (v.ok) {
    v.detail += "; " + stretch.detail;
  }
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::string notes;
  SuiteOptions options;
  options.n = 5;
  for (const char* name : {"sylvester", "pendant", "interlacing", "cutvertex", "p1", "twins", "twin_rank3",
                           "singleton_rank", "coalescence_bounds", "multipartite_coalescence", "lem311"}) {
    suite_clean(v, verify_suite(name, options), notes);
  }
  v.detail = v.ok ? notes : v.detail;
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::mt19937_64 rng(default_seed());
  int canon = 0;
  int brute = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 8;
    const QuartGainGraph g = random_gain_graph(rng, n, 0.5, false);
    const SwitchAssignment theta = random_switch(rng, n);
    v.require(tree_normalize(apply_switch(g, theta)).graph == tree_normalize(g).graph, serialize_graph(g));
    ++canon;
  }
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 5;
    const QuartGainGraph g = random_gain_graph(rng, n, 0.6, false);
    QuartGainGraph h = apply_switch(t % 3 == 0 ? converse(g) : g, random_switch(rng, n));
    if (t % 2 == 1 && h.size() > 0) {
      auto edges = h.edges();
      edges[rng() % edges.size()].gain *= Unit::from_power(1 + static_cast<int>(rng() % 3));
      h = QuartGainGraph(n, edges);
    }
    v.require(switching_equivalent(g, h) == oracle::brute_equivalent(g, h, true), serialize_graph(g));
    ++brute;
  }
  v.detail = v.ok ? std::to_string(canon) + " canonical-form pairs, " + std::to_string(brute) +
                        " brute-force comparisons"
                  : v.detail;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", criterion1},
      {"cycle nullity table", criterion2},
      {"c3t rank", criterion3},
      {"predicate sweeps", criterion4},
      {"gain family examples", criterion5},
      {"pendant classification", [] { return timed_suite("thm11", 5, 120); }},
      {"cut-vertex classification", criterion7},
      {"structural suites", criterion8},
      {"canonicalization soundness", criterion9},
  };
  bool all = true;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    Verdict v;
    try {
      v = criteria[j].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all = all && v.ok;
    std::printf("criterion %zu %s: %s (%s)\n", j + 1, criteria[j].first, v.ok ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
