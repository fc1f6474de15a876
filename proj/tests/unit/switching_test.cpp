#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hermitia/errors.hpp"
#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/suites.hpp"
#include "hermitia/switching.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hermitia {
namespace {

using testing::complete;
using testing::g;
using testing::path;
using testing::triangle;

const Unit k1 = Unit::one();
const Unit kI = Unit::i();
const Unit kMinusI = Unit::minus_i();
const QuartGainGraph kArc = g("n 2\nA 0 1");
const QuartGainGraph kOdd = triangle(kI, k1, k1);
const QuartGainGraph kPositive = triangle(kI, kMinusI, k1);

TEST(ApplySwitch, ArcToEdge) {
  EXPECT_EQ(apply_switch(kArc, SwitchAssignment{{k1, kMinusI}}), path(2));
}

TEST(ApplySwitch, IdentityAndMinusOne) {
  EXPECT_EQ(apply_switch(kOdd, SwitchAssignment::identity(3)), kOdd);
  const QuartGainGraph neg = apply_switch(path(2), SwitchAssignment{{k1, Unit::minus_one()}});
  EXPECT_EQ(neg.gain(0, 1), Unit::minus_one());
  EXPECT_FALSE(neg.is_mixed());
  EXPECT_THROW(apply_switch(path(2), SwitchAssignment::identity(3)), PreconditionError);
}

TEST(Converse, Examples) {
  EXPECT_EQ(converse(kArc), g("n 2\nA 1 0"));
  EXPECT_EQ(converse(complete(3)), complete(3));
  EXPECT_EQ(converse(triangle(kI, kI, k1)), triangle(kMinusI, kMinusI, k1));
}

TEST(TwoWay, DirectedReversesCutArcs) {
  EXPECT_EQ(two_way_directed(kArc, VertexSet{0}), g("n 2\nA 1 0"));
  EXPECT_EQ(two_way_directed(kOdd, VertexSet{}), kOdd);
}

TEST(TwoWay, MixedTurnsEdgesIntoArcsAgainstFormerArcs) {
  // Cut {0} | {1, 2}: arc 0->1 leaves side, edge (0,2) is undirected.
  const QuartGainGraph x = g("n 3\nA 0 1\nU 0 2");
  const QuartGainGraph y = two_way_mixed(x, VertexSet{0});
  EXPECT_EQ(y.gain(0, 1), k1);
  EXPECT_EQ(y.gain(0, 2), kMinusI);  // arc 2->0, opposite to the former 0->1
  EXPECT_TRUE(y.is_mixed());
  EXPECT_EQ(two_way_mixed(x, VertexSet{}), x);
  EXPECT_TRUE(switching_equivalent(x, y, false));
}

TEST(Cycle, ValueAndSignature) {
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_EQ(cycle_value(complete(3), tri), k1);
  EXPECT_EQ(cycle_signature(complete(3), tri), 0);
  const QuartGainGraph around = QuartGainGraph(3, {{0, 1, kI}, {1, 2, kI}, {2, 0, kI}});
  EXPECT_EQ(cycle_value(around, tri), kMinusI);
  EXPECT_EQ(cycle_signature(around, tri), 3);
  const QuartGainGraph c4 = gen_cycle(4, {0});
  const std::vector<Vertex> quad{0, 1, 2, 3};
  EXPECT_EQ(std::abs(cycle_signature(c4, quad)), 1);
  EXPECT_EQ(inertia(c4).eta, 0);
}

TEST(Cycle, RejectsNonCycles) {
  const std::vector<Vertex> walk{0, 1, 2};
  EXPECT_THROW(cycle_value(path(3), walk), PreconditionError);
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_THROW(cycle_signature(triangle(Unit::minus_one(), k1, k1), tri), PreconditionError);
}

TEST(TreeNormalize, Examples) {
  const Normalized arc = tree_normalize(kArc);
  EXPECT_EQ(arc.graph, path(2));
  EXPECT_EQ(apply_switch(kArc, arc.theta), arc.graph);
  EXPECT_EQ(tree_normalize(kPositive).graph, complete(3));
  const QuartGainGraph negative_quad = QuartGainGraph(4, {{0, 1, kI}, {1, 2, kI}, {2, 3, k1}, {0, 3, k1}});
  const QuartGainGraph norm = tree_normalize(negative_quad).graph;
  std::size_t non_unit = 0;
  for (const Edge& e : norm.edges()) {
    non_unit += e.gain == k1 ? 0 : 1;
    if (e.gain != k1) {
      EXPECT_EQ(e.gain, Unit::minus_one());
    }
  }
  EXPECT_EQ(non_unit, 1U);
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(switching_equivalent(kArc, path(2)));
  EXPECT_TRUE(switching_equivalent(kPositive, complete(3)));
  EXPECT_FALSE(switching_equivalent(kOdd, complete(3)));
  EXPECT_TRUE(is_positive(complete(3)));
  EXPECT_TRUE(is_positive(kPositive));
  EXPECT_FALSE(is_positive(kOdd));
}

TEST(Equivalent, ConverseIsOptional) {
  const QuartGainGraph other = triangle(kMinusI, k1, k1);
  EXPECT_FALSE(switching_equivalent(kOdd, other, false));
  EXPECT_TRUE(switching_equivalent(kOdd, other, true));
  const auto w = equivalence_witness(kOdd, other);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->converse);
  EXPECT_EQ(apply_witness(kOdd, *w), other);
}

TEST(UpToIso, Examples) {
  const auto w = switching_equivalent_up_to_iso(g("n 2\nA 1 0"), path(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(apply_witness(g("n 2\nA 1 0"), *w), path(2));
  EXPECT_FALSE(switching_equivalent_up_to_iso(kOdd, complete(3)).has_value());
  const QuartGainGraph placed = triangle(k1, kMinusI, k1);
  const auto v = switching_equivalent_up_to_iso(kOdd, placed);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(apply_witness(kOdd, *v), placed);
}

TEST(UpToIso, RespectsCap) {
  EXPECT_THROW(switching_equivalent_up_to_iso(complete(5), complete(5), 4), SizeLimitError);
}

TEST(UpToIso, FindsRelabeledSwitchings) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 6;
    const QuartGainGraph x = random_gain_graph(rng, n, 0.5, false);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    QuartGainGraph y = apply_switch(relabel(x, perm), random_switch(rng, n));
    if (t % 3 == 0) {
      y = converse(y);
    }
    const auto w = switching_equivalent_up_to_iso(x, y);
    ASSERT_TRUE(w.has_value()) << serialize_graph(x) << serialize_graph(y);
    EXPECT_EQ(apply_witness(x, *w), y);
  }
}

TEST(Triangles, OddAndEven) {
  EXPECT_TRUE(is_odd_triangle(kOdd));
  EXPECT_FALSE(is_even_triangle(kOdd));
  EXPECT_TRUE(is_even_triangle(kPositive));
  EXPECT_FALSE(is_odd_triangle(path(3)));
  EXPECT_FALSE(is_even_triangle(path(3)));
}

TEST(SwitchingProperty, SwitchPreservesInertiaAndCanonicalForm) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 8;
    const QuartGainGraph x = random_gain_graph(rng, n, 0.5, false);
    const QuartGainGraph y = apply_switch(x, random_switch(rng, n));
    EXPECT_EQ(inertia(y), inertia(x));
    EXPECT_EQ(tree_normalize(y).graph, tree_normalize(x).graph);
    const auto theta = switching_witness(x, y);
    ASSERT_TRUE(theta.has_value());
    EXPECT_EQ(apply_switch(x, *theta), y);
    const auto ex = eig_float(hermitian_matrix(x));
    const auto ey = eig_float(hermitian_matrix(y));
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(ex[j], ey[j], 1e-8);
    }
  }
}

TEST(SwitchingProperty, AgreesWithBruteForce) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + t % 5;
    const QuartGainGraph x = random_gain_graph(rng, n, 0.6, false);
    QuartGainGraph y = apply_switch(t % 4 == 0 ? converse(x) : x, random_switch(rng, n));
    if (t % 2 == 1 && y.size() > 0) {
      auto edges = y.edges();
      edges[rng() % edges.size()].gain *= Unit::from_power(1 + static_cast<int>(rng() % 3));
      y = QuartGainGraph(n, edges);
    }
    EXPECT_EQ(switching_equivalent(x, y, true), oracle::brute_equivalent(x, y, true));
    EXPECT_EQ(switching_equivalent(x, y, false), oracle::brute_equivalent(x, y, false));
  }
}

TEST(SwitchingProperty, CycleValueInvariantSignatureNot) {
  std::mt19937_64 rng(34);
  bool signature_moved = false;
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Vertex> walk(n);
    std::iota(walk.begin(), walk.end(), Vertex{0});
    for (int t = 0; t < 30; ++t) {
      std::vector<std::size_t> arcs;
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 2) {
          arcs.push_back(j);
        }
      }
      const QuartGainGraph c = gen_cycle(n, arcs);
      const QuartGainGraph d = apply_switch(c, random_switch(rng, n));
      EXPECT_EQ(cycle_value(d, walk), cycle_value(c, walk));
      const int sigma = cycle_signature(c, walk);
      EXPECT_EQ(is_positive(c), ((sigma % 4) + 4) % 4 == 0);
      if (d.is_mixed() && cycle_signature(d, walk) != sigma) {
        signature_moved = true;
      }
    }
  }
  EXPECT_TRUE(signature_moved);
}

}  // namespace
}  // namespace hermitia
