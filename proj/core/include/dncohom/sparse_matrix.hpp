#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dncohom {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when two independent routes of the same computation disagree.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sparse row of (column, value) pairs, strictly increasing columns, no zeros.
template <typename T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseRationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;

  /// Stores value at (r, c); a zero value erases the entry.
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  Rational get(std::size_t r, std::size_t c) const;

  /// Appends a new row and returns its index.
  std::size_t append_row();
  void resize_cols(std::size_t cols);

  const std::map<std::size_t, Rational>& row(std::size_t r) const { return rows_.at(r); }

  SparseRationalMatrix transposed() const;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

/// Rank over Q by fraction-free integer elimination. For matrices with more
/// than `kModularCheckThreshold` nonzeros a multi-modular rank is computed as
/// well; disagreement raises InternalError.
std::size_t exact_rank(const SparseRationalMatrix& m);

/// Rank over Q of a list of sparse rows (the matrix they span as rows).
std::size_t exact_rank(const std::vector<SparseRow<Rational>>& rows);

inline constexpr std::size_t kModularCheckThreshold = 400;

/// Rank over Z/pZ. The prime must exceed every denominator of the input
/// (entries with a denominator divisible by p raise std::domain_error).
std::size_t modular_rank(const std::vector<SparseRow<Rational>>& rows, std::uint64_t prime);

/// Deterministic Miller-Rabin test, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// A prime in [2^61, 2^62) chosen from the seed.
std::uint64_t random_prime_u62(std::uint64_t seed);

/// Incrementally built reduced row-echelon basis over Q. Each stored row has
/// a distinct pivot column with coefficient 1; reduce() returns the unique
/// normal form of a vector modulo the span.
class RowEchelon {
 public:
  /// Adds a row to the span. Returns true when it increased the rank.
  bool insert(SparseRow<Rational> row);

  /// Normal form of `v` modulo the span: zero at every pivot column.
  SparseRow<Rational> reduce(SparseRow<Rational> v) const;

  bool contains(const SparseRow<Rational>& v) const { return reduce(v).empty(); }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  // pivot column -> row (first entry is (pivot, 1)).
  std::map<std::size_t, SparseRow<Rational>> pivots_;
};

/// a + factor * b on sparse rows.
SparseRow<Rational> axpy(const SparseRow<Rational>& a, const Rational& factor, const SparseRow<Rational>& b);

}  // namespace dncohom
