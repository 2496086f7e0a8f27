#pragma once

// Truncated elements of the superalgebra of differential polynomials in one
// dependent variable u: polynomials in u, the jets u^S (|S| > 0) and the odd
// generators theta^T (T in Z^D_{>=0}).

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dncohom/multi_index.hpp"
#include "dncohom/sparse_matrix.hpp"

namespace dncohom {

/// A result would leave the declared truncation window.
class TruncationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated computation changed when the truncation was enlarged.
class TruncationUnstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Truncation {
  int d_max = 16;  // bound on the standard degree
  int u_max = 16;  // bound on the power of the undifferentiated u

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// u^{u0} * prod u^{S_k}^{e_k} * theta^{T_1} ... theta^{T_p}, |S_k| > 0,
/// S_k strictly ascending, T_j strictly ascending (sign-normalized).
struct SuperMonomial {
  int u0 = 0;
  std::vector<std::pair<MultiIndex, int>> jets;
  std::vector<MultiIndex> thetas;

  int standard_degree() const noexcept;
  int super_degree() const noexcept { return static_cast<int>(thetas.size()); }
  /// Number of u-type and theta factors; preserved by d/dx^i and by Delta.
  int weight() const noexcept;
  /// Power of u^S, S possibly zero.
  int exponent(const MultiIndex& S) const noexcept;
  bool has_theta(const MultiIndex& T) const noexcept;

  /// Multiplies this monomial by (u^S)^k, k may be negative (k >= -exponent).
  void multiply_u(const MultiIndex& S, int k);

  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;

  std::string to_string() const;
};

class SuperDiffPolynomial {
 public:
  using Terms = std::map<SuperMonomial, Rational>;

  explicit SuperDiffPolynomial(int D = 1, Truncation t = {});

  static SuperDiffPolynomial constant(int D, const Rational& c, Truncation t = {});
  /// The jet variable u^S (S = 0 gives u).
  static SuperDiffPolynomial u(int D, const MultiIndex& S, Truncation t = {});
  static SuperDiffPolynomial u(int D, Truncation t = {}) { return u(D, MultiIndex(static_cast<std::size_t>(D)), t); }
  static SuperDiffPolynomial theta(int D, const MultiIndex& T, Truncation t = {});
  static SuperDiffPolynomial theta(int D, Truncation t = {}) {
    return theta(D, MultiIndex(static_cast<std::size_t>(D)), t);
  }
  static SuperDiffPolynomial from_monomial(int D, const SuperMonomial& m, const Rational& c = 1, Truncation t = {});

  int D() const noexcept { return D_; }
  const Truncation& truncation() const noexcept { return trunc_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m; throws TruncationOverflow when m leaves the window.
  void add_term(const SuperMonomial& m, const Rational& c);

  SuperDiffPolynomial& operator+=(const SuperDiffPolynomial& o);
  SuperDiffPolynomial& operator-=(const SuperDiffPolynomial& o);
  SuperDiffPolynomial operator+(const SuperDiffPolynomial& o) const { return SuperDiffPolynomial(*this) += o; }
  SuperDiffPolynomial operator-(const SuperDiffPolynomial& o) const { return SuperDiffPolynomial(*this) -= o; }
  SuperDiffPolynomial operator-() const { return *this * Rational(-1); }
  /// Graded-commutative product.
  SuperDiffPolynomial operator*(const SuperDiffPolynomial& o) const;
  SuperDiffPolynomial operator*(const Rational& c) const;

  /// Terms of super degree p and standard degree d.
  SuperDiffPolynomial component(int p, int d) const;
  /// Splits into components keyed by (super degree, standard degree, weight).
  std::map<std::tuple<int, int, int>, SuperDiffPolynomial> graded_components() const;

  /// Same terms under a different truncation window (checked).
  SuperDiffPolynomial with_truncation(Truncation t) const;

  /// Bi-degree (p, d) if every term shares it.
  bool is_homogeneous(int p, int d) const;

  friend bool operator==(const SuperDiffPolynomial& a, const SuperDiffPolynomial& b) {
    return a.D_ == b.D_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const SuperDiffPolynomial& o) const;

  int D_;
  Truncation trunc_;
  Terms terms_;
};

/// Product of two monomials: the merged monomial and the sign (0 if a theta
/// repeats).
std::pair<SuperMonomial, int> multiply_monomials(const SuperMonomial& a, const SuperMonomial& b);

/// Every monomial with super degree p, standard degree d and weight w in D
/// independent variables, ascending.
std::vector<SuperMonomial> enumerate_monomials(int D, int p, int d, int w);

}  // namespace dncohom
