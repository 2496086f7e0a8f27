#include <gtest/gtest.h>

#include <algorithm>

#include "dncohom/multi_index.hpp"

using dncohom::MultiIndex;

TEST(MultiIndex, GradedLexOrder) {
  EXPECT_LT((MultiIndex{0, 2}), (MultiIndex{1, 1}));
  EXPECT_LT((MultiIndex{1, 1}), (MultiIndex{2, 0}));
  EXPECT_LT((MultiIndex{2, 0}), (MultiIndex{0, 3}));
  EXPECT_EQ((MultiIndex{1, 2}).degree(), 3);
}

TEST(MultiIndex, Arithmetic) {
  const MultiIndex a{1, 2, 0};
  const MultiIndex b{0, 1, 3};
  EXPECT_EQ(a + b, (MultiIndex{1, 3, 3}));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_TRUE((MultiIndex{0, 1, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_THROW(a - b, std::invalid_argument);
  EXPECT_EQ(a.raised(2), (MultiIndex{1, 2, 1}));
  EXPECT_EQ(a.lowered(1), (MultiIndex{1, 1, 0}));
  EXPECT_EQ(MultiIndex::unit(3, 1), (MultiIndex{0, 1, 0}));
}

TEST(MultiIndex, Resize) {
  EXPECT_EQ((MultiIndex{1, 2}).resized(3), (MultiIndex{1, 2, 0}));
  EXPECT_EQ((MultiIndex{1, 2, 0}).resized(2), (MultiIndex{1, 2}));
  EXPECT_THROW((MultiIndex{1, 2, 1}).resized(2), std::invalid_argument);
}

TEST(MultiIndex, RejectsOversizedDimension) { EXPECT_THROW(MultiIndex(dncohom::kMaxIndexDim + 1), std::length_error); }

TEST(CanonicalizeOdd, SignOfPermutation) {
  std::vector<MultiIndex> g{MultiIndex{1, 0}, MultiIndex{0, 0}};
  EXPECT_EQ(dncohom::canonicalize_odd(g), -1);
  EXPECT_EQ(g[0], (MultiIndex{0, 0}));

  std::vector<MultiIndex> h{MultiIndex{2}, MultiIndex{0}, MultiIndex{1}};
  EXPECT_EQ(dncohom::canonicalize_odd(h), 1);
  EXPECT_TRUE(std::is_sorted(h.begin(), h.end()));
}

TEST(CanonicalizeOdd, RepeatedGeneratorVanishes) {
  std::vector<MultiIndex> g{MultiIndex{1}, MultiIndex{0}, MultiIndex{1}};
  EXPECT_EQ(dncohom::canonicalize_odd(g), 0);
}

TEST(CanonicalizeOdd, MatchesInversionCount) {
  // Sign of a permutation of distinct generators equals (-1)^{inversions}.
  std::vector<int> perm{0, 1, 2, 3, 4};
  do {
    std::vector<MultiIndex> g;
    for (int v : perm) g.push_back(MultiIndex{v});
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    EXPECT_EQ(dncohom::canonicalize_odd(g), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}
