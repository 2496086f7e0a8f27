#pragma once

// Variational calculus on the truncated algebra of super differential
// polynomials: total derivatives, variational derivatives, the operator
// Delta, the Schouten bracket of local multivectors, D_P and the evaluation
// map iota, plus the quotient by total derivatives.

#include <cstdint>
#include <vector>

#include "dncohom/superpoly.hpp"

namespace dncohom {

/// Total derivative d/dx^axis, axis in 1..D.
SuperDiffPolynomial d_x(int axis, const SuperDiffPolynomial& f);

/// d^S = prod_i (d/dx^i)^{s_i}.
SuperDiffPolynomial d_multi(const MultiIndex& S, const SuperDiffPolynomial& f);

/// Partial derivative by the even variable u^S (S = 0 is u itself).
SuperDiffPolynomial partial_u(const MultiIndex& S, const SuperDiffPolynomial& f);

/// Left partial derivative by the odd variable theta^T.
SuperDiffPolynomial partial_theta(const MultiIndex& T, const SuperDiffPolynomial& f);

/// Every S with u^S occurring in f, ascending.
std::vector<MultiIndex> u_variables(const SuperDiffPolynomial& f);
/// Every T with theta^T occurring in f, ascending.
std::vector<MultiIndex> theta_variables(const SuperDiffPolynomial& f);

/// Delta = sum_S theta^{S + xi_D} d/du^S.
SuperDiffPolynomial delta_op(const SuperDiffPolynomial& f);

/// sum_S (-1)^{|S|} d^S (df/du^S).
SuperDiffPolynomial var_der_u(const SuperDiffPolynomial& f);
/// sum_S (-1)^{|S|} d^S (df/dtheta^S).
SuperDiffPolynomial var_der_theta(const SuperDiffPolynomial& f);

/// Class of a density modulo d_1 A + ... + d_D A. The representative of a
/// normalized class is the unique normal form against a row-echelon basis of
/// the total derivatives in each graded component.
struct QuotientClass {
  SuperDiffPolynomial representative;
  bool normalized = false;

  int D() const noexcept { return representative.D(); }
  bool is_zero() const { return normalized && representative.is_zero(); }

  friend bool operator==(const QuotientClass& a, const QuotientClass& b);
};

/// Normal form of f modulo total derivatives. The reduction is carried out
/// component by component in (super degree, degree, weight); the weight is
/// preserved by every d/dx^i, so each component is a finite problem.
QuotientClass quotient_normalize(const SuperDiffPolynomial& f);

/// Same, but requires f to be homogeneous of bi-degree (p, d).
QuotientClass quotient_normalize(const SuperDiffPolynomial& f, int p, int d);

bool is_total_derivative(const SuperDiffPolynomial& f);

/// [P, Q] = int (dP/dtheta dQ/du + (-1)^p dP/du dQ/dtheta) for P of super
/// degree p (P must be homogeneous in the super degree).
QuotientClass schouten(const QuotientClass& P, const QuotientClass& Q);

/// D_P(f) = sum_S d^S(dP/dtheta) df/du^S + (-1)^p d^S(dP/du) df/dtheta^S.
SuperDiffPolynomial d_operator(const QuotientClass& P, const SuperDiffPolynomial& f);

/// iota(P)(I_1, ..., I_p) with every I_k of super degree 0.
QuotientClass iota_eval(const QuotientClass& P, const std::vector<SuperDiffPolynomial>& functionals);

/// The standard bivector 1/2 int theta theta^{xi_D}.
QuotientClass standard_bivector(int D, Truncation t = {});

/// dim H^p_d of d = [P_hat, .] on local multivectors, computed by exact
/// linear algebra on the components of weight p .. p + u_max. Checked
/// against the components up to weight p + u_max + 1 and throws
/// TruncationUnstable if the extra weight contributes.
std::int64_t brute_cohomology(int D, int p, int d, int u_max);

/// dim of the Delta-cohomology of the (un-quotiented) algebra in bi-degree
/// (p, d), summed over weights p .. p + u_max.
std::int64_t delta_cohomology_dim(int D, int p, int d, int u_max);

}  // namespace dncohom
