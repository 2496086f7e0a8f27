#include <gtest/gtest.h>

#include "dncohom/grading.hpp"
#include "dncohom/theta.hpp"

using namespace dncohom;

TEST(ThetaPolynomial, ProductAnticommutes) {
  const auto a = ThetaPolynomial::monomial(2, {MultiIndex{0}});
  const auto b = ThetaPolynomial::monomial(2, {MultiIndex{1}});
  EXPECT_EQ(a * b, b * a * Rational(-1));
  EXPECT_TRUE((a * a).is_zero());
  EXPECT_EQ(ThetaPolynomial::monomial(2, {MultiIndex{1}, MultiIndex{0}}), b * a);
}

TEST(ThetaPolynomial, PartialThetaIsADerivation) {
  // d(theta theta^1) = theta^1 theta^1 + theta theta^2 = theta theta^2.
  const auto f = ThetaPolynomial::monomial(2, {MultiIndex{0}, MultiIndex{1}});
  EXPECT_EQ(partial_theta(1, f), ThetaPolynomial::monomial(2, {MultiIndex{0}, MultiIndex{2}}));
  const auto g = ThetaPolynomial::monomial(3, {MultiIndex{0, 0}, MultiIndex{1, 0}});
  const auto h = ThetaPolynomial::monomial(3, {MultiIndex{0, 1}});
  EXPECT_EQ(partial_theta(2, g * h), partial_theta(2, g) * h + g * partial_theta(2, h));
  EXPECT_THROW(partial_theta(2, f), std::out_of_range);
  EXPECT_THROW(partial_theta(0, g), std::out_of_range);
}

TEST(ThetaPolynomial, ComponentExtraction) {
  auto f = ThetaPolynomial::monomial(2, {MultiIndex{0}, MultiIndex{1}}) + ThetaPolynomial::monomial(2, {MultiIndex{2}});
  EXPECT_EQ(f.component(2, 1), ThetaPolynomial::monomial(2, {MultiIndex{0}, MultiIndex{1}}));
  EXPECT_EQ(f.component(1, 2), ThetaPolynomial::monomial(2, {MultiIndex{2}}));
  EXPECT_TRUE(f.component(1, 1).is_zero());
}

TEST(Theta, BlockRankMatchesFullMatrixRank) {
  for (int D = 2; D <= 4; ++D)
    for (int p = 0; p <= 3; ++p)
      for (int d = 0; d <= (D == 4 ? 4 : 6); ++d)
        EXPECT_EQ(image_rank(D, p, d), exact_rank(image_matrix(D, p, d))) << "D=" << D << " p=" << p << " d=" << d;
}

TEST(Theta, ImageMatrixShape) {
  const auto m = image_matrix(3, 2, 2);
  EXPECT_EQ(m.rows(), static_cast<std::size_t>(theta_dim(3, 2, 2)));
  EXPECT_EQ(m.cols(), 2u * static_cast<std::size_t>(theta_dim(3, 2, 1)));
}

TEST(Theta, D1HasNoDerivations) {
  EXPECT_EQ(h_theta_dim(1, 0, 0), 1);
  EXPECT_EQ(h_theta_dim(1, 1, 0), 1);
  EXPECT_EQ(h_theta_dim(1, 2, 0), 0);
  EXPECT_EQ(h_theta_dim(1, 1, 1), 0);
}

TEST(Theta, LowDegreeValues) {
  // H^{d+1}_d(D) = C(D-1, d) and H^p_d(D) = 0 for p >= d + 2.
  for (int D = 2; D <= 4; ++D)
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(h_theta_dim(D, d + 1, d), binomial(D - 1, d));
      EXPECT_EQ(h_theta_dim(D, d + 2, d), 0);
    }
  EXPECT_EQ(h_theta_dim(2, 0, 1), 0);
  EXPECT_EQ(h_theta_dim(2, 0, 0), 1);
}
