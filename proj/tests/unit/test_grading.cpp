#include <gtest/gtest.h>

#include <functional>

#include "dncohom/grading.hpp"
#include "dncohom/theta.hpp"

using namespace dncohom;

namespace {

// Partitions of n into exactly k parts by direct recursion on the largest part.
std::int64_t partitions_oracle(int n, int k, int max_part) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (int part = 1; part <= std::min(n, max_part); ++part) total += partitions_oracle(n - part, k - 1, part);
  return total;
}

}  // namespace

TEST(Grading, MultiIndicesOfDegree) {
  const auto level = multi_indices_of_degree(2, 2);
  ASSERT_EQ(level.size(), 3u);
  EXPECT_EQ(level[0], (MultiIndex{0, 2}));
  EXPECT_EQ(level[1], (MultiIndex{1, 1}));
  EXPECT_EQ(level[2], (MultiIndex{2, 0}));
  EXPECT_EQ(multi_indices_of_degree(0, 0).size(), 1u);
  EXPECT_TRUE(multi_indices_of_degree(0, 1).empty());
  for (int k = 1; k <= 4; ++k)
    for (int d = 0; d <= 6; ++d)
      EXPECT_EQ(static_cast<std::int64_t>(multi_indices_of_degree(k, d).size()), count_multi_indices(k, d));
}

TEST(Grading, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(30, 15), 155117520);
}

TEST(Grading, PartitionCountMatchesRecursion) {
  for (int n = 0; n <= 25; ++n)
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(partition_count(n, k), partitions_oracle(n, k, n)) << n << "," << k;
  EXPECT_EQ(partition_count(-1, 2), 0);
  EXPECT_EQ(partition_count(7, 3), 4);
}

TEST(Grading, ThetaDimMatchesEnumeration) {
  for (int D = 1; D <= 4; ++D)
    for (int p = 0; p <= 4; ++p)
      for (int d = 0; d <= 6; ++d)
        EXPECT_EQ(theta_dim(D, p, d), static_cast<std::int64_t>(enumerate_basis(D, p, d).size()))
            << "D=" << D << " p=" << p << " d=" << d;
}

TEST(Grading, ThetaDimD2ByPartitions) {
  for (int p = 0; p <= 6; ++p)
    for (int d = 0; d <= 15; ++d) EXPECT_EQ(theta_dim_d2(p, d), theta_dim(2, p, d));
}

TEST(Grading, GeneratingSeriesMatchesClosedForm) {
  for (int D = 2; D <= 4; ++D) {
    const auto series = theta_generating_series(D, 5, 10);
    for (int p = 0; p <= 5; ++p)
      for (int d = 0; d <= 10; ++d) EXPECT_EQ(series[p][d], theta_dim(D, p, d));
  }
}

TEST(Grading, DimTableDetectsConflicts) {
  DimTable t;
  t.D = 2;
  t.record(1, 1, 1, DimMethod::rank);
  EXPECT_NO_THROW(t.record(1, 1, 1, DimMethod::closed_form));
  EXPECT_THROW(t.record(1, 1, 2, DimMethod::oracle), std::logic_error);
  EXPECT_EQ(to_string(DimMethod::pva), "pva");
}
