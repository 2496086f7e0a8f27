#pragma once

// Poisson cohomology dimensions of the scalar flat bracket
// {u(x), u(y)} = sum_i c^i d_i delta(x - y) in D independent variables.
//
// dim H^p_d = dim H^p_d(D) + dim H^{p+1}_d(D), where H(D) is the quotient of
// the exterior algebra Theta by the derivations d_1 .. d_{D-1} (see theta.hpp).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dncohom/grading.hpp"
#include "dncohom/sparse_matrix.hpp"

namespace dncohom {

std::int64_t poisson_dim(int D, int p, int d);

/// Closed values available without a rank computation (D >= 2). Returns
/// nullopt for cells the case list does not reach.
std::optional<std::int64_t> corollary_dim(int D, int p, int d);

/// Case formula for dim H^2_d at D = 2, valid for d >= 3 only.
std::int64_t h2_closed_form_d2(int d);

/// dim H^p_d(2) for p in {2, 3} by the explicit case formulas.
std::int64_t h_theta_closed_forms_d2(int p, int d);

/// dim H^p_d(2) as a difference of partition numbers; the cell (0, 1) is the
/// single exception and evaluates to 0.
std::int64_t h_theta_partition_difference_d2(int p, int d);

/// Coefficients of x^{p(p-1)/2} prod_{i=2}^p (1 - x^i)^{-1} up to x^{d_max}.
/// The closed series is not valid at p = 0 and is rejected there.
std::vector<std::int64_t> h_generating_series_d2(int p, int d_max);

/// Window of bidegrees on which H^p_d(D) vanishes by a degree count:
/// C(D+l-1, l) < p <= C(D+l, l+1) and 0 <= d < p(l+1) - C(D+l, l).
struct VanishingRange {
  int D = 2;
  int l = 0;
  int p_min_exclusive = 0;
  int p_max = 0;

  /// Exclusive upper bound on d for the given p.
  int d_bound(int p) const;
  bool contains(int p, int d) const;
  std::vector<std::pair<int, int>> cells() const;
};

VanishingRange vanishing_range(int D, int l);

/// poisson_dim over 0..p_max x 0..d_max, tagged with how each value was
/// obtained. Cells also covered by corollary_dim are cross-checked.
DimTable dim_table(int D, int p_max, int d_max);

/// Flat bracket constants c^1..c^D, not all zero.
struct BracketSpec {
  int D = 1;
  std::vector<Rational> c;

  BracketSpec() = default;
  explicit BracketSpec(std::vector<Rational> coefficients);

  /// True iff c = xi_D.
  bool normalized() const;
};

/// Unimodular change of independent variables with J c = xi_D.
struct NormalizationMatrix {
  std::vector<std::vector<Rational>> J;

  Rational determinant() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
};

/// Deterministic pivot construction; throws std::invalid_argument for c = 0
/// and for D = 1 with c != 1 (no unimodular 1x1 matrix rescales c).
NormalizationMatrix normalize_bracket(const BracketSpec& spec);

}  // namespace dncohom
