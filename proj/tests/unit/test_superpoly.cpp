#include <gtest/gtest.h>

#include <algorithm>

#include "dncohom/grading.hpp"
#include "dncohom/superpoly.hpp"
#include "random_elements.hpp"

using namespace dncohom;
using dncohom::testing::RandomElements;

namespace {

SuperDiffPolynomial th(int D, std::initializer_list<int> S) { return SuperDiffPolynomial::theta(D, MultiIndex(S)); }
SuperDiffPolynomial uu(int D, std::initializer_list<int> S) { return SuperDiffPolynomial::u(D, MultiIndex(S)); }

}  // namespace

TEST(SuperDiffPolynomial, OddGeneratorsAnticommute) {
  const auto a = th(2, {0, 0}), b = th(2, {1, 0});
  EXPECT_EQ(a * b, -(b * a));
  EXPECT_TRUE((a * a).is_zero());
  EXPECT_EQ(uu(2, {0, 1}) * a, a * uu(2, {0, 1}));
}

TEST(SuperDiffPolynomial, GradedCommutativityAndAssociativity) {
  RandomElements r(dncohom::testing::kDefaultSeed, "superpoly");
  for (int trial = 0; trial < 40; ++trial) {
    const int p = r.uniform(0, 2), q = r.uniform(0, 2);
    const auto f = r.poly(2, p, r.uniform(0, 2)), g = r.poly(2, q, r.uniform(0, 2)), h = r.poly(2, 1, 1);
    EXPECT_EQ(f * g, (g * f) * Rational((p * q) % 2 == 0 ? 1 : -1));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
  }
}

TEST(SuperDiffPolynomial, GradingAndComponents) {
  const auto f = uu(2, {0, 0}) * uu(2, {1, 1}) * th(2, {0, 1}) + th(2, {0, 0}) * Rational(3);
  const auto parts = f.graded_components();
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(parts.count({1, 3, 3}));
  EXPECT_TRUE(parts.count({1, 0, 1}));
  EXPECT_EQ(f.component(1, 0), th(2, {0, 0}) * Rational(3));
  EXPECT_FALSE(f.is_homogeneous(1, 3));
  EXPECT_TRUE(f.component(1, 3).is_homogeneous(1, 3));
}

TEST(SuperDiffPolynomial, RationalsAreCanonical) {
  auto f = SuperDiffPolynomial::constant(1, Rational(2, 4));
  EXPECT_EQ(f, SuperDiffPolynomial::constant(1, Rational(1) / 2));
  EXPECT_EQ(f.to_string(), "1/2*1");
}

TEST(SuperDiffPolynomial, TruncationOverflowAndMismatch) {
  const Truncation t{2, 1};
  const auto u1 = SuperDiffPolynomial::u(2, MultiIndex{1, 0}, t);
  EXPECT_NO_THROW(u1 * u1);
  EXPECT_THROW(u1 * u1 * u1, TruncationOverflow);
  const auto u0 = SuperDiffPolynomial::u(2, t);
  EXPECT_THROW(u0 * u0, TruncationOverflow);
  EXPECT_THROW(u1 + SuperDiffPolynomial::u(2, MultiIndex{1, 0}), std::invalid_argument);
  EXPECT_THROW(u1 + SuperDiffPolynomial::u(3, MultiIndex{1, 0, 0}, t), std::invalid_argument);
}

TEST(EnumerateMonomials, PureThetaCountMatchesExteriorAlgebra) {
  // Odd generators theta^S, S in Z^D, are those of Theta for D + 1 variables.
  for (int D = 1; D <= 3; ++D)
    for (int p = 0; p <= 3; ++p)
      for (int d = 0; d <= 4; ++d)
        EXPECT_EQ(static_cast<std::int64_t>(enumerate_monomials(D, p, d, p).size()), theta_dim(D + 1, p, d));
}

TEST(EnumerateMonomials, EvenCountInOneVariable) {
  // For D = 1 and p = 0 a monomial is u^{w - k} times a partition of d into k parts.
  for (int w = 0; w <= 4; ++w)
    for (int d = 0; d <= 7; ++d) {
      std::int64_t expect = 0;
      for (int k = 0; k <= w; ++k) expect += partition_count(d, k);
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_monomials(1, 0, d, w).size()), expect) << w << "," << d;
    }
}

TEST(EnumerateMonomials, SortedAndGraded) {
  const auto mons = enumerate_monomials(2, 1, 2, 3);
  EXPECT_TRUE(std::is_sorted(mons.begin(), mons.end()));
  for (const auto& m : mons) {
    EXPECT_EQ(m.super_degree(), 1);
    EXPECT_EQ(m.standard_degree(), 2);
    EXPECT_EQ(m.weight(), 3);
  }
  EXPECT_TRUE(enumerate_monomials(2, 2, 1, 1).empty());
}
