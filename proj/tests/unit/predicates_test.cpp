#include <gtest/gtest.h>

#include "hermitia/classify.hpp"
#include "hermitia/errors.hpp"
#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"

namespace hermitia {
namespace {

std::vector<std::size_t> ones(int k) { return std::vector<std::size_t>(static_cast<std::size_t>(k), 1); }

TEST(TwinTriangleBound, Examples) {
  EXPECT_TRUE(cor39_condition(2, 2, 1));
  EXPECT_TRUE(cor39_condition(2, 5, 2));
  EXPECT_FALSE(cor39_condition(5, 8, 3));
  EXPECT_EQ(inertia(gen_K_plain(ones(5), ones(8), 3)).p, 3);
  EXPECT_THROW(cor39_condition(1, 2, 1), PreconditionError);
  EXPECT_THROW(cor39_condition(2, 2, 3), PreconditionError);
}

TEST(TwinTriangleBound, BoundaryTieCountsAsTrue) {
  // 1/3 + 1/3 + 1/3 = 1 exactly.
  EXPECT_TRUE(cor39_condition(3, 7, 3));
  EXPECT_EQ(inertia(gen_K_plain(ones(3), ones(7), 3)).p, 2);
  EXPECT_FALSE(cor39_condition(4, 7, 3));
}

TEST(PlainFamilyBound, Examples) {
  EXPECT_TRUE(lem38_condition(2, 2, 1, 1));
  EXPECT_FALSE(lem38_condition(3, 2, 1, 1));
  EXPECT_EQ(inertia(gen_K_gain(ones(3), ones(2), 1, 1, 0, 0)).p, 3);
  EXPECT_TRUE(lem38_condition(2, 4, 2, 0));
  EXPECT_THROW(lem38_condition(2, 3, 1, 2), PreconditionError);
}

TEST(GainFamilyBound, Examples) {
  EXPECT_TRUE(lem310_condition(2, 4, 2, 2));
  EXPECT_EQ(lem310_case(2, 4, 2, 2), 6);
  EXPECT_TRUE(lem310_condition(2, 6, 4, 2));
  EXPECT_EQ(lem310_case(2, 6, 4, 2), 9);
  EXPECT_FALSE(lem310_condition(5, 4, 2, 1));
  EXPECT_EQ(inertia(gen_K_gain(ones(5), ones(4), 2, 0, 1, 0)).p, 3);
}

TEST(GainFamilyBound, BoundaryTieCountsAsTrue) {
  // (a s - 1)/(a + s) = 1/3 = 1/(r - 1) at a = 2, s = 1, r = 4.
  EXPECT_EQ(lem310_case(4, 4, 2, 1), 10);
  EXPECT_EQ(inertia(gen_K_gain(ones(4), ones(4), 2, 0, 1, 0)).p, 2);
  EXPECT_FALSE(lem310_condition(5, 4, 2, 1));
}

TEST(ClassifierCases, SubcaseNumbering) {
  EXPECT_EQ(thm12_iv_case(3, 4, 2, 1), 9);
  EXPECT_EQ(thm12_iv_case(2, 4, 2, 2), 5);
  EXPECT_FALSE(thm12_iv_case(5, 4, 2, 1).has_value());
  EXPECT_TRUE(thm12_iii_condition(2, 2, 1, 1));
  EXPECT_FALSE(thm12_iii_condition(3, 2, 1, 1));
  EXPECT_EQ(thm12_ii_case(2, 2, 1, 2), 1);
  EXPECT_FALSE(thm12_ii_case(2, 2, 1, 1).has_value());
  EXPECT_EQ(thm12_ii_case(2, 3, 2, 1), 2);
}

TEST(FormulaReport, PlainFamilyRegimes) {
  const FormulaReport s1 = formula_report_38(2, 3, 2, 0);
  EXPECT_EQ(*s1.phi, Rational(2));
  EXPECT_EQ(*s1.rho, Rational(-2));
  EXPECT_TRUE(s1.verdict);
  const FormulaReport s0 = formula_report_38(3, 4, 2, 2);
  EXPECT_FALSE(s0.xi.has_value());
  const FormulaReport zero = formula_report_38(2, 3, 3, 0);
  EXPECT_EQ(*zero.phi, Rational(0));
  EXPECT_TRUE(zero.verdict);
  EXPECT_THROW(formula_report_38(2, 3, 1, 0), PreconditionError);
}

TEST(FormulaReport, GainFamilyRegime) {
  const FormulaReport r = formula_report_310(2, 6, 4, 2);
  ASSERT_TRUE(r.xi.has_value());
  EXPECT_LE(r.xi->sign(), 0);
  EXPECT_TRUE(r.verdict);
  EXPECT_FALSE(r.rho.has_value());
}

}  // namespace
}  // namespace hermitia
