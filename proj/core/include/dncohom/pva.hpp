#pragma once

// Scalar Poisson vertex algebras in D independent variables: lambda-brackets
// from the master formula, the skewsymmetry and Jacobi axioms, symmetries and
// first-order deformations of a bracket, and their cohomology in low degree.

#include <cstdint>
#include <map>
#include <vector>

#include "dncohom/superpoly.hpp"

namespace dncohom {

/// Polynomial in one or more groups of D symbols (lambda, mu, ...) with
/// coefficients in the even differential polynomials. Keys have dimension
/// groups * D; group g occupies entries g*D .. g*D + D - 1.
class LambdaSeries {
 public:
  using Terms = std::map<MultiIndex, SuperDiffPolynomial>;

  explicit LambdaSeries(int D = 1, int groups = 1, Truncation t = {});

  /// f * lambda^0.
  static LambdaSeries constant(const SuperDiffPolynomial& f, int groups = 1);
  /// The symbol lambda_axis of the given group (axis in 1..D).
  static LambdaSeries symbol(int D, int axis, int group = 0, int groups = 1, Truncation t = {});
  /// sum_i c_i lambda_i.
  static LambdaSeries linear(const std::vector<Rational>& c, Truncation t = {});

  int D() const noexcept { return D_; }
  int groups() const noexcept { return groups_; }
  const Truncation& truncation() const noexcept { return trunc_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  SuperDiffPolynomial coefficient(const MultiIndex& I) const;
  void add(const MultiIndex& I, const SuperDiffPolynomial& c);

  LambdaSeries& operator+=(const LambdaSeries& o);
  LambdaSeries& operator-=(const LambdaSeries& o);
  LambdaSeries operator+(const LambdaSeries& o) const { return LambdaSeries(*this) += o; }
  LambdaSeries operator-(const LambdaSeries& o) const { return LambdaSeries(*this) -= o; }
  LambdaSeries operator*(const Rational& c) const;
  /// Product of series (symbols and coefficients both multiply).
  LambdaSeries operator*(const LambdaSeries& o) const;

  /// A one-group series placed into group `group` of a `groups`-group series.
  LambdaSeries embedded(int groups, int group) const;

  /// Coefficient of lambda^0 (the bracket evaluated at lambda = 0).
  SuperDiffPolynomial at_zero() const;

  /// True when every coefficient is a constant.
  bool has_constant_coefficients() const;

  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    return a.D_ == b.D_ && a.groups_ == b.groups_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const LambdaSeries& o) const;

  int D_;
  int groups_;
  Truncation trunc_;
  Terms terms_;
};

/// {f_lambda g} for the bracket with generator bracket {u_lambda u} = B.
LambdaSeries master_bracket(const SuperDiffPolynomial& f, const SuperDiffPolynomial& g, const LambdaSeries& B);

struct AxiomCheck {
  bool holds = false;
  LambdaSeries residual;
};

/// Residual B(lambda) + sum_I (-lambda - d)^I B_I.
AxiomCheck check_skew(const LambdaSeries& B);

/// Residual {u_l{u_m u}} - {u_m{u_l u}} - {{u_l u}_{l+m} u} in two symbol
/// groups. Throws std::invalid_argument for a bracket that is not skew.
AxiomCheck check_jacobi(const LambdaSeries& B);

/// X(B) - {X_lambda u} - {u_lambda X} for the evolutionary field with
/// characteristic X.
LambdaSeries symmetry_residual(const SuperDiffPolynomial& X, const LambdaSeries& B);

/// First-order part of the Jacobi residual of B + eps * Btilde:
/// {u_l Bt(m)} - {u_m Bt(l)} - {Bt(l)_{l+m} u} with the outer brackets taken
/// with B, plus the same expression with the roles of B and Bt exchanged.
LambdaSeries deformation_residual(const LambdaSeries& Btilde, const LambdaSeries& B);

/// Order-eps term {F_lambda u} + {u_lambda F} of the bracket after the change
/// of variables u -> u + eps F.
LambdaSeries miura_first_order(const SuperDiffPolynomial& F, const LambdaSeries& B);

/// Degree-2 template sum_{a,b} A^{ab} l_a l_b + B^{ab} l_a u_b + C^{ab} u_a u_b
/// + D^{ab} u_{a+b}, every slot a polynomial in u alone.
struct Degree2Slots {
  int D = 2;
  std::vector<std::vector<SuperDiffPolynomial>> A, B, C, Dd;

  /// All slots zero.
  static Degree2Slots zero(int D, Truncation t = {});

  LambdaSeries series() const;
};

/// Applies the skewsymmetry relations A = 0, C^{ab} = (B^{ab}' + B^{ba}')/4,
/// D^{ab} = (B^{ab} + B^{ba})/4, keeping B. Throws std::invalid_argument when
/// the slots do not form a D x D template of functions of u.
Degree2Slots skew_normalize(const Degree2Slots& raw);

/// Linear equations over a finite list of unknowns.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<SparseRow<Rational>> equations;

  std::size_t rank() const;
  std::size_t solution_dim() const { return unknowns - rank(); }
};

/// Generic evolutionary field of degree d and weight w: the monomial basis of
/// even differential polynomials with that degree and weight.
struct VectorFieldAnsatz {
  int D = 1;
  int d = 0;
  int w = 0;
  std::vector<SuperDiffPolynomial> basis;

  static VectorFieldAnsatz generic(int D, int d, int w, Truncation t = {});
};

/// Generic deformation of total degree d (symbols plus derivatives) and
/// coefficient weight w: lambda^I times a monomial.
struct DeformationAnsatz {
  int D = 1;
  int d = 0;
  int w = 0;
  std::vector<LambdaSeries> basis;

  static DeformationAnsatz generic(int D, int d, int w, Truncation t = {});
  /// The skew-normalized degree-2 template with B^{ab} = u^k, k <= M.
  static DeformationAnsatz degree2_template(int D, int M, Truncation t = {});
};

/// Equations of symmetry_residual over the ansatz unknowns.
LinearSystem symmetry_system(const VectorFieldAnsatz& X, const LambdaSeries& B);
/// Equations of deformation_residual over the ansatz unknowns.
LinearSystem deformation_system(const DeformationAnsatz& ansatz, const LambdaSeries& B);
/// Equations of the skewsymmetry residual over the ansatz unknowns.
LinearSystem skew_system(const DeformationAnsatz& ansatz);

/// dim H^1_d of the bracket B (constant coefficients), summed over the
/// coefficient weights 0..M. Throws TruncationUnstable when weight M + 1
/// still contributes.
std::int64_t solve_h1(const LambdaSeries& B, int d, int M);
std::int64_t solve_h1(int D, int d, int M);

/// dim H^2_d of the bracket B (constant coefficients), same protocol.
std::int64_t solve_h2(const LambdaSeries& B, int d, int M);
std::int64_t solve_h2(int D, int d, int M);

}  // namespace dncohom
