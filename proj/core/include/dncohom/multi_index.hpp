#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dncohom {

/// Maximum number of components a MultiIndex can carry.
inline constexpr std::size_t kMaxIndexDim = 8;

/// Element S of Z^k_{>=0}. Indexes jet variables u^S, odd generators theta^S
/// and monomials in the lambda symbols.
///
/// Ordering is graded lexicographic: total degree first, then lexicographic
/// on the entries, so (0,2) < (1,1) < (2,0) < (0,0,3)... within a fixed dim.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::size_t dim) : dim_(static_cast<std::uint8_t>(check_dim(dim))) {}

  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  explicit MultiIndex(const std::vector<int>& entries)
      : dim_(static_cast<std::uint8_t>(check_dim(entries.size()))) {
    for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
  }

  /// The unit multi-index xi_axis (0-based axis).
  static MultiIndex unit(std::size_t dim, std::size_t axis) {
    MultiIndex m(dim);
    m.set(axis, 1);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  int operator[](std::size_t i) const noexcept { return e_[i]; }

  void set(std::size_t i, int value) {
    if (i >= dim_) throw std::out_of_range("MultiIndex::set: axis out of range");
    if (value < 0 || value > 255) throw std::domain_error("MultiIndex entries must lie in [0, 255]");
    degree_ = static_cast<std::uint16_t>(degree_ - e_[i] + value);
    e_[i] = static_cast<std::uint8_t>(value);
  }

  /// |S|, the sum of the entries.
  int degree() const noexcept { return degree_; }

  bool is_zero() const noexcept { return degree_ == 0; }

  /// S + xi_axis.
  MultiIndex raised(std::size_t axis, int by = 1) const {
    MultiIndex r = *this;
    r.set(axis, e_[axis] + by);
    return r;
  }

  /// S - xi_axis; the caller checks that the entry is positive.
  MultiIndex lowered(std::size_t axis) const {
    MultiIndex r = *this;
    r.set(axis, e_[axis] - 1);
    return r;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("MultiIndex dimension mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < dim_; ++i) r.set(i, e_[i] + o.e_[i]);
    return r;
  }

  /// Componentwise S <= T.
  bool divides(const MultiIndex& o) const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  MultiIndex operator-(const MultiIndex& o) const {
    if (o.dim_ != dim_ || !o.divides(*this)) throw std::invalid_argument("MultiIndex subtraction underflow");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < dim_; ++i) r.set(i, e_[i] - o.e_[i]);
    return r;
  }

  /// The same entries embedded in a larger dimension (zero padded) or the
  /// leading entries of a smaller one; dropped entries must be zero.
  MultiIndex resized(std::size_t dim) const {
    MultiIndex r(dim);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i < dim) r.set(i, e_[i]);
      else if (e_[i] != 0) throw std::invalid_argument("MultiIndex::resized drops a nonzero entry");
    }
    return r;
  }

  std::vector<int> entries() const { return {e_.begin(), e_.begin() + dim_}; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }

  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) s += ',';
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.to_string(); }

 private:
  static std::size_t check_dim(std::size_t d) {
    if (d > kMaxIndexDim) throw std::length_error("MultiIndex dimension exceeds kMaxIndexDim");
    return d;
  }

  std::array<std::uint8_t, kMaxIndexDim> e_{};
  std::uint8_t dim_ = 0;
  std::uint16_t degree_ = 0;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept {
    std::size_t h = m.dim();
    for (std::size_t i = 0; i < m.dim(); ++i) h = h * 1315423911u + static_cast<std::size_t>(m[i]) + 0x9e37;
    return h;
  }
};

/// Sorts a product of anticommuting generators into ascending order.
/// Returns the sign of the permutation, or 0 when a generator repeats (the
/// product then vanishes).
inline int canonicalize_odd(std::vector<MultiIndex>& gens) {
  int sign = 1;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const auto c = gens[j - 1] <=> gens[j];
      if (c == 0) return 0;
      if (c < 0) break;
      std::swap(gens[j - 1], gens[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i - 1] == gens[i]) return 0;
  return sign;
}

}  // namespace dncohom
