#include <gtest/gtest.h>

#include <random>

#include "dncohom/sparse_matrix.hpp"

using namespace dncohom;

namespace {

// Dense Gauss-Jordan over Q, used as an independent rank oracle.
std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<SparseRow<Rational>> to_sparse(const std::vector<std::vector<Rational>>& a) {
  std::vector<SparseRow<Rational>> rows;
  for (const auto& r : a) {
    SparseRow<Rational> s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) s.emplace_back(c, r[c]);
    rows.push_back(std::move(s));
  }
  return rows;
}

std::vector<std::vector<Rational>> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> coeff(-3, 3), num(1, 4), fill(0, 99);
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
  for (auto& r : a)
    for (auto& x : r)
      if (fill(rng) < density) {
        x = Rational(coeff(rng), num(rng));
        x.canonicalize();
      }
  return a;
}

}  // namespace

TEST(SparseRationalMatrix, SetGetAndTranspose) {
  SparseRationalMatrix m(2, 3);
  m.set(0, 2, Rational(1, 2));
  m.add(1, 0, 3);
  m.add(1, 0, -3);
  EXPECT_EQ(m.get(0, 2), Rational(1, 2));
  EXPECT_EQ(m.get(1, 0), 0);
  EXPECT_EQ(m.nonzeros(), 1u);
  const auto t = m.transposed();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.get(2, 0), Rational(1, 2));
  EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
  EXPECT_EQ(exact_rank(SparseRationalMatrix::identity(5)), 5u);
}

TEST(ExactRank, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    auto a = random_matrix(rng, r, c, 35);
    // Plant a dependency now and then.
    if (r >= 3 && trial % 2 == 0)
      for (std::size_t k = 0; k < c; ++k) a[2][k] = a[0][k] * 2 - a[1][k] / 3;
    EXPECT_EQ(exact_rank(to_sparse(a)), dense_rank(a)) << "trial " << trial;
  }
}

TEST(ExactRank, LargeMatrixTriggersModularCrossCheck) {
  std::mt19937_64 rng(5);
  auto a = random_matrix(rng, 40, 40, 60);
  for (std::size_t k = 0; k < 40; ++k) a[39][k] = a[0][k] + a[1][k];
  const auto rows = to_sparse(a);
  std::size_t nnz = 0;
  for (const auto& r : rows) nnz += r.size();
  ASSERT_GT(nnz, kModularCheckThreshold);
  EXPECT_EQ(exact_rank(rows), dense_rank(a));
  EXPECT_EQ(modular_rank(rows, random_prime_u62(3)), dense_rank(a));
}

TEST(Primes, MillerRabinAgreesWithTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
      if (n % q == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime_u64(n), trial(n)) << n;
  EXPECT_TRUE(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  EXPECT_FALSE(is_prime_u64(3215031751ull));          // strong pseudoprime to bases 2, 3, 5, 7
  const auto p = random_prime_u62(42);
  EXPECT_TRUE(is_prime_u64(p));
  EXPECT_GE(p, 1ull << 61);
  EXPECT_LT(p, 1ull << 62);
  EXPECT_EQ(p, random_prime_u62(42));
}

TEST(RowEchelon, NormalFormIsUnique) {
  RowEchelon e;
  EXPECT_TRUE(e.insert({{0, 1}, {1, 1}}));
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}));
  EXPECT_FALSE(e.insert({{0, 1}, {2, -1}}));
  EXPECT_EQ(e.rank(), 2u);
  // v and v + (span element) reduce to the same vector.
  const SparseRow<Rational> v{{0, 2}, {2, 5}};
  const auto w = axpy(v, 3, SparseRow<Rational>{{0, 1}, {1, 1}});
  EXPECT_EQ(e.reduce(v), e.reduce(w));
  EXPECT_TRUE(e.contains({{0, 1}, {2, -1}}));
  EXPECT_FALSE(e.contains({{2, 1}}));
}
