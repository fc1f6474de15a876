#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hermitia/enumerate.hpp"
#include "hermitia/errors.hpp"
#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/suites.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hermitia {
namespace {

using testing::complete;
using testing::g;
using testing::path;
using testing::triangle;

const QuartGainGraph kOdd = triangle(Unit::i(), Unit::one(), Unit::one());

TEST(HermitianMatrix, Edge) {
  const HermitianMatrix h = hermitian_matrix(path(2));
  EXPECT_EQ(h.at(0, 1), GaussianRational(1));
  EXPECT_EQ(h.at(1, 0), GaussianRational(1));
  EXPECT_TRUE(h.at(0, 0).is_zero());
}

TEST(HermitianMatrix, ArcEntries) {
  const HermitianMatrix h = hermitian_matrix(g("n 2\nA 0 1"));
  EXPECT_EQ(h.at(0, 1), GaussianRational::i());
  EXPECT_EQ(h.at(1, 0), -GaussianRational::i());
  EXPECT_TRUE(h.is_hermitian());
}

TEST(HermitianMatrix, EmptyGraphIsZero) {
  const HermitianMatrix h = hermitian_matrix(QuartGainGraph(3));
  EXPECT_EQ(h.dim(), 3U);
  EXPECT_TRUE(h.is_zero());
}

TEST(InertiaExact, Examples) {
  EXPECT_EQ(inertia_exact(hermitian_matrix(complete(3))), (InertiaTriple{1, 2, 0}));
  EXPECT_EQ(inertia_exact(hermitian_matrix(kOdd)), (InertiaTriple{1, 1, 1}));
  EXPECT_EQ(inertia_exact(hermitian_matrix(gen_c3t(2, 2, 2))), (InertiaTriple{1, 1, 4}));
}

TEST(InertiaExact, RejectsNonHermitian) {
  HermitianMatrix h(2);
  h.at(0, 1) = GaussianRational(1);
  EXPECT_THROW(inertia_exact(h), PreconditionError);
}

TEST(InertiaExact, DiagonalEntriesUseSymmetricPivots) {
  HermitianMatrix h(3);
  h.at(0, 0) = GaussianRational(Rational(-1, 2));
  h.at(1, 1) = GaussianRational(3);
  EXPECT_EQ(inertia_exact(h), (InertiaTriple{1, 1, 1}));
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(path(2)), (InertiaTriple{1, 1, 0}));
  EXPECT_EQ(inertia(gen_cycle(4)), (InertiaTriple{1, 1, 2}));
  EXPECT_EQ(inertia(disjoint_union(path(2), path(2))), (InertiaTriple{2, 2, 0}));
  EXPECT_EQ(inertia(QuartGainGraph(2)), (InertiaTriple{0, 0, 2}));
  EXPECT_EQ(inertia(path(2)).to_string(), "p=1 n=1 eta=0");
}

// Frozen from the characteristic-polynomial oracle.
TEST(Inertia, BowtieValues) {
  EXPECT_EQ(inertia(coalesce(complete(3), 0, complete(3), 0)), (InertiaTriple{2, 3, 0}));
  EXPECT_EQ(inertia(coalesce(complete(3), 0, kOdd, 0)), (InertiaTriple{2, 3, 0}));
  EXPECT_EQ(inertia(coalesce(complete(3), 0, complete(3), 0)).to_string(), "p=2 n=3 eta=0");
}

TEST(EigFloat, Examples) {
  const auto p2 = eig_float(hermitian_matrix(path(2)));
  ASSERT_EQ(p2.size(), 2U);
  EXPECT_NEAR(p2[0], -1, 1e-12);
  EXPECT_NEAR(p2[1], 1, 1e-12);
  const auto k3 = eig_float(hermitian_matrix(complete(3)));
  ASSERT_EQ(k3.size(), 3U);
  EXPECT_NEAR(k3[0], -1, 1e-12);
  EXPECT_NEAR(k3[1], -1, 1e-12);
  EXPECT_NEAR(k3[2], 2, 1e-12);
  const std::vector<double> c4_expected{-2, 0, 0, 2};
  const auto c4 = eig_float(hermitian_matrix(gen_cycle(4)));
  ASSERT_EQ(c4.size(), 4U);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(c4[j], c4_expected[j], 1e-12);
  }
}

TEST(EigFloat, CycleClosedForm) {
  for (std::size_t n = 3; n <= 9; ++n) {
    auto ev = eig_float(hermitian_matrix(gen_cycle(n)));
    std::vector<double> closed;
    for (std::size_t j = 0; j < n; ++j) {
      closed.push_back(2 * std::cos(2 * M_PI * static_cast<double>(j) / static_cast<double>(n)));
    }
    std::sort(closed.begin(), closed.end());
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(ev[j], closed[j], 1e-10);
    }
  }
}

TEST(InertiaFloat, Examples) {
  EXPECT_EQ(inertia_float(hermitian_matrix(path(2)), 1e-9), (InertiaTriple{1, 1, 0}));
  EXPECT_EQ(inertia_float(HermitianMatrix(4), 1e-9), (InertiaTriple{0, 0, 4}));
  EXPECT_EQ(inertia_float(hermitian_matrix(kOdd), 1e-9), inertia_exact(hermitian_matrix(kOdd)));
  EXPECT_THROW(inertia_float(hermitian_matrix(path(2)), 0), PreconditionError);
}

TEST(SpectraProperty, AgreesWithCharpolyOracleOnCorpus) {
  EnumSpec spec;
  spec.n = 5;
  spec.min_n = 1;
  std::size_t count = 0;
  enumerate_switching_classes(spec, [&count](const QuartGainGraph& x) {
    const HermitianMatrix h = hermitian_matrix(x);
    EXPECT_EQ(inertia_exact(h), oracle::charpoly_inertia(h)) << serialize_graph(x);
    EXPECT_EQ(inertia(x), inertia_exact(h));
    ++count;
    return true;
  });
  EXPECT_GT(count, 1000U);
}

TEST(SpectraProperty, RandomGraphsAgreeWithCharpolyOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const QuartGainGraph x = random_gain_graph(rng, 1 + t % 9, 0.5, false);
    const HermitianMatrix h = hermitian_matrix(x);
    EXPECT_EQ(inertia_exact(h), oracle::charpoly_inertia(h)) << serialize_graph(x);
    EXPECT_EQ(inertia_float(h), inertia_exact(h)) << serialize_graph(x);
  }
}

TEST(SpectraProperty, CongruenceByInvertibleMatrix) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> part(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    const HermitianMatrix h = hermitian_matrix(random_gain_graph(rng, n, 0.5, false));
    GaussianMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s.at(i, j) = GaussianRational(Rational(part(rng)), Rational(part(rng)));
      }
    }
    if (oracle::charpoly_inertia(s.conj_transpose() * s).eta != 0) {
      continue;  // singular draw
    }
    EXPECT_EQ(inertia_exact(congruence(h, s)), inertia_exact(h));
  }
}

}  // namespace
}  // namespace hermitia
