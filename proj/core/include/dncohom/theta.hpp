#pragma once

// The exterior algebra Theta = R[theta^S : S in Z^{D-1}_{>=0}] with the
// derivations d/dx^1 .. d/dx^{D-1}, and the quotient
// H(D) = Theta / (d_1 Theta + ... + d_{D-1} Theta) graded by (p, d).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dncohom/multi_index.hpp"
#include "dncohom/sparse_matrix.hpp"

namespace dncohom {

/// Product of distinct odd generators theta^{S_1} ... theta^{S_p}, stored in
/// strictly ascending graded-lex order. The sign of a reordering lives in the
/// coefficient of the owning ThetaPolynomial.
class ThetaMonomial {
 public:
  ThetaMonomial() = default;

  /// Requires strictly ascending generators.
  explicit ThetaMonomial(std::vector<MultiIndex> generators);

  const std::vector<MultiIndex>& generators() const noexcept { return gens_; }
  int super_degree() const noexcept { return static_cast<int>(gens_.size()); }
  int standard_degree() const noexcept;

  /// Sum of the generator multi-indices (the fine multi-degree).
  MultiIndex multi_degree(std::size_t gen_dim) const;

  friend auto operator<=>(const ThetaMonomial&, const ThetaMonomial&) = default;
  friend bool operator==(const ThetaMonomial&, const ThetaMonomial&) = default;

  std::string to_string() const;

 private:
  std::vector<MultiIndex> gens_;
};

class ThetaPolynomial {
 public:
  /// Element of Theta for D independent variables (generators in Z^{D-1}).
  explicit ThetaPolynomial(int D = 2);

  static ThetaPolynomial monomial(int D, std::vector<MultiIndex> generators, const Rational& coeff = 1);

  int D() const noexcept { return D_; }
  const std::map<ThetaMonomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const ThetaMonomial& m, const Rational& c);

  ThetaPolynomial& operator+=(const ThetaPolynomial& o);
  ThetaPolynomial& operator-=(const ThetaPolynomial& o);
  ThetaPolynomial operator+(const ThetaPolynomial& o) const { return ThetaPolynomial(*this) += o; }
  ThetaPolynomial operator-(const ThetaPolynomial& o) const { return ThetaPolynomial(*this) -= o; }
  ThetaPolynomial operator*(const ThetaPolynomial& o) const;
  ThetaPolynomial operator*(const Rational& c) const;

  /// Homogeneous component of super degree p and standard degree d.
  ThetaPolynomial component(int p, int d) const;

  friend bool operator==(const ThetaPolynomial& a, const ThetaPolynomial& b) {
    return a.D_ == b.D_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int D_;
  std::map<ThetaMonomial, Rational> terms_;
};

/// The derivation theta^S -> theta^{S + xi_axis}, axis in 1..D-1.
ThetaPolynomial partial_theta(int axis, const ThetaPolynomial& f);

/// All monomials of Theta^p_d in ascending order.
std::vector<ThetaMonomial> enumerate_basis(int D, int p, int d);

/// Columns: d_axis(m) for axis = 1..D-1 (outer) and m in the basis of
/// Theta^p_{d-1} (inner); rows: the basis of Theta^p_d.
SparseRationalMatrix image_matrix(int D, int p, int d);

/// dim H^p_d(D) = dim Theta^p_d - rank(image_matrix(D, p, d)). The rank is
/// computed block by block over the fine multi-degree and memoized.
std::int64_t h_theta_dim(int D, int p, int d);

/// Rank of image_matrix(D, p, d) via the multi-degree block decomposition.
std::size_t image_rank(int D, int p, int d);

}  // namespace dncohom
