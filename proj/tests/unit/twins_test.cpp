#include <random>

#include <gtest/gtest.h>

#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/suites.hpp"
#include "hermitia/switching.hpp"
#include "hermitia/twins.hpp"
#include "test_util.hpp"

namespace hermitia {
namespace {

using testing::path;

TEST(Twins, C3tPartAIsOneClass) {
  const QuartGainGraph x = gen_c3t(2, 1, 1);  // part A = {0, 1}
  EXPECT_EQ(are_twins(x, 0, 1), Unit::one());
  EXPECT_FALSE(are_twins(x, 0, 2).has_value());
}

TEST(Twins, AdjacentVerticesAreNotTwins) { EXPECT_FALSE(are_twins(path(2), 0, 1).has_value()); }

TEST(Twins, AlphaFromNeighbourRow) {
  // Both ends of P3 see vertex 1; the arc sets the factor.
  const QuartGainGraph x = QuartGainGraph(3, {{0, 1, Unit::i()}, {1, 2, Unit::one()}});
  EXPECT_EQ(are_twins(x, 0, 2), Unit::i());
  const TwinPartition part = twin_partition(x);
  EXPECT_EQ(part.size(), 2U);
  EXPECT_EQ(part.classes[0], (VertexSet{0, 2}));
  EXPECT_EQ(part.representative, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(part.class_of, (std::vector<std::size_t>{0, 1, 0}));
}

TEST(Twins, IsolatedPairUsesOne) {
  EXPECT_EQ(are_twins(QuartGainGraph(2), 0, 1), Unit::one());
}

TEST(Twins, C3tReducesToOddTriangle) {
  for (std::size_t t1 = 1; t1 <= 3; ++t1) {
    for (std::size_t t2 = 1; t2 <= 3; ++t2) {
      for (std::size_t t3 = 1; t3 <= 3; ++t3) {
        const QuartGainGraph red = twin_reduction(gen_c3t(t1, t2, t3));
        EXPECT_EQ(red.order(), 3U);
        EXPECT_TRUE(switching_equivalent(red, gen_c3t(1, 1, 1)));
      }
    }
  }
}

TEST(TwinsProperty, ReductionOfSwitchedBlowUp) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> sizes(2 + t % 3);
    for (auto& s : sizes) {
      s = 1 + rng() % 3;
    }
    const QuartGainGraph base = gen_complete_multipartite(sizes);
    const QuartGainGraph x = apply_switch(base, random_switch(rng, base.order()));
    const TwinPartition part = twin_partition(x);
    EXPECT_EQ(part.size(), sizes.size());
    for (Vertex u = 0; u < x.order(); ++u) {
      const Vertex rep = part.representative[part.class_of[u]];
      for (Vertex y = 0; y < x.order(); ++y) {
        if (y != u && y != rep) {
          const auto hu = x.gain(u, y);
          const auto hr = x.gain(rep, y);
          ASSERT_EQ(hu.has_value(), hr.has_value());
          if (hu) {
            EXPECT_EQ(*hu, part.alpha[u] * *hr);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace hermitia
