#include <gtest/gtest.h>

#include "dncohom/cohomology.hpp"
#include "dncohom/pva.hpp"
#include "dncohom/varcalc.hpp"
#include "random_elements.hpp"

using namespace dncohom;
using dncohom::testing::RandomElements;

namespace {

using SDP = SuperDiffPolynomial;

SDP u_pow(int D, int k) {
  SuperMonomial m;
  m.u0 = k;
  return SDP::from_monomial(D, m);
}

SDP uj(int D, std::initializer_list<int> S) { return SDP::u(D, MultiIndex(S)); }

LambdaSeries lam(int D, int axis) { return LambdaSeries::symbol(D, axis); }

// Random polynomial in u alone of degree <= deg.
SDP random_function_of_u(RandomElements& r, int D, int deg) {
  SDP f(D);
  for (int k = 0; k <= deg; ++k) f += u_pow(D, k) * Rational(r.coefficient());
  return f;
}

// Rank of a family of series, flattened over a shared (lambda, monomial) index.
std::size_t series_rank(const std::vector<LambdaSeries>& family) {
  std::map<std::pair<MultiIndex, SuperMonomial>, std::size_t> index;
  std::vector<SparseRow<Rational>> rows;
  for (const auto& s : family) {
    std::map<std::size_t, Rational> row;
    for (const auto& [I, c] : s.terms())
      for (const auto& [m, x] : c.terms()) row[index.try_emplace({I, m}, index.size()).first->second] += x;
    rows.emplace_back(row.begin(), row.end());
  }
  return exact_rank(rows);
}

}  // namespace

TEST(MasterBracket, GeneratorAndProduct) {
  EXPECT_EQ(master_bracket(SDP::u(2), SDP::u(2), lam(2, 2)), lam(2, 2));
  const auto u = SDP::u(2);
  const auto expect = LambdaSeries::constant(u * Rational(2)) * lam(2, 2) + LambdaSeries::constant(uj(2, {0, 1}) * Rational(2));
  EXPECT_EQ(master_bracket(u * u, u, lam(2, 2)), expect);
  EXPECT_TRUE(master_bracket(SDP::constant(2, 3), u, lam(2, 2)).is_zero());
}

TEST(MasterBracket, SesquilinearityInTheFirstArgument) {
  // {d_i f _lambda g} = -lambda_i {f_lambda g}.
  RandomElements r(dncohom::testing::kDefaultSeed + 20, "sesquilinear");
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = r.poly(2, 0, r.uniform(0, 1), 2, 3);
    const auto g = r.poly(2, 0, r.uniform(0, 1), 2, 3);
    const int i = r.uniform(1, 2);
    EXPECT_EQ(master_bracket(d_x(i, f), g, lam(2, 2)), master_bracket(f, g, lam(2, 2)) * lam(2, i) * Rational(-1));
  }
}

TEST(Axioms, Skewsymmetry) {
  EXPECT_TRUE(check_skew(lam(3, 3)).holds);
  const auto A = LambdaSeries::constant(u_pow(2, 2) + SDP::constant(2, 1));
  const auto bad = check_skew(A);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.residual.is_zero());
  RandomElements r(dncohom::testing::kDefaultSeed + 21, "skew");
  for (int trial = 0; trial < 10; ++trial)
    for (int D = 1; D <= 3; ++D) {
      LambdaSeries B(D);
      for (int a = 1; a <= D; ++a) {
        const auto Aa = random_function_of_u(r, D, 3);
        B += LambdaSeries::constant(Aa * Rational(2)) * lam(D, a);
        B += LambdaSeries::constant(partial_u(MultiIndex(static_cast<std::size_t>(D)), Aa) *
                                    SDP::u(D, MultiIndex::unit(static_cast<std::size_t>(D), static_cast<std::size_t>(a - 1))));
      }
      EXPECT_TRUE(check_skew(B).holds) << B.to_string();
    }
}

TEST(Axioms, Jacobi) {
  EXPECT_TRUE(check_jacobi(lam(2, 2)).holds);
  EXPECT_TRUE(check_jacobi(lam(2, 2) + lam(2, 1)).holds);
  EXPECT_TRUE(deformation_residual(lam(2, 1), lam(2, 2)).is_zero());
  EXPECT_TRUE(deformation_residual(LambdaSeries(2), lam(2, 2)).is_zero());
  EXPECT_THROW(check_jacobi(LambdaSeries::constant(SDP::u(2))), std::invalid_argument);
  auto B = LambdaSeries::constant(SDP::u(2) * Rational(2)) * lam(2, 1) + LambdaSeries::constant(uj(2, {1, 0}));
  EXPECT_TRUE(check_skew(B).holds);
  EXPECT_TRUE(check_jacobi(B).holds);
  auto C = LambdaSeries::constant(u_pow(2, 2) * Rational(2)) * lam(2, 1) * lam(2, 1) * lam(2, 1);
  C += LambdaSeries::constant(SDP::u(2) * uj(2, {1, 0}) * Rational(6)) * lam(2, 1) * lam(2, 1);
  C += LambdaSeries::constant((SDP::u(2) * uj(2, {2, 0}) + uj(2, {1, 0}) * uj(2, {1, 0})) * Rational(6)) * lam(2, 1);
  C += LambdaSeries::constant(SDP::u(2) * uj(2, {3, 0}) * Rational(2) + uj(2, {1, 0}) * uj(2, {2, 0}) * Rational(6));
  ASSERT_TRUE(check_skew(C).holds) << check_skew(C).residual.to_string();
  const auto j = check_jacobi(C);
  EXPECT_FALSE(j.holds);
  EXPECT_FALSE(j.residual.is_zero());
}

TEST(Symmetries, TranslationsAndScaling) {
  for (int i = 1; i <= 2; ++i)
    EXPECT_TRUE(symmetry_residual(SDP::u(2, MultiIndex::unit(2, static_cast<std::size_t>(i - 1))), lam(2, 2)).is_zero());
  EXPECT_TRUE(symmetry_residual(SDP::constant(2, 1), lam(2, 2)).is_zero());
  EXPECT_EQ(symmetry_residual(SDP::u(2), lam(2, 2)), lam(2, 2) * Rational(-2));
}

TEST(SkewNormalize, Relations) {
  auto raw = Degree2Slots::zero(2);
  const auto Bu = u_pow(2, 3);
  raw.B[0][1] = Bu;
  const auto s = skew_normalize(raw);
  const auto quarter_prime = partial_u(MultiIndex(2), Bu) * (Rational(1) / 4);
  EXPECT_EQ(s.C[0][1], quarter_prime);
  EXPECT_EQ(s.C[1][0], quarter_prime);
  EXPECT_EQ(s.Dd[0][1], Bu * (Rational(1) / 4));
  EXPECT_EQ(s.Dd[1][0], Bu * (Rational(1) / 4));
  EXPECT_TRUE(s.A[0][1].is_zero());
  EXPECT_TRUE(s.C[0][0].is_zero());
  EXPECT_TRUE(skew_normalize(Degree2Slots::zero(3)).series().is_zero());

  auto bad = Degree2Slots::zero(2);
  bad.B.pop_back();
  EXPECT_THROW(skew_normalize(bad), std::invalid_argument);
  auto jet = Degree2Slots::zero(2);
  jet.B[0][0] = uj(2, {1, 0});
  EXPECT_THROW(skew_normalize(jet), std::invalid_argument);
}

TEST(SkewNormalize, AlwaysSkew) {
  RandomElements r(dncohom::testing::kDefaultSeed + 22, "skew_normalize");
  for (int trial = 0; trial < 20; ++trial) {
    const int D = r.uniform(1, 3);
    auto raw = Degree2Slots::zero(D);
    for (auto* slot : {&raw.A, &raw.B, &raw.C, &raw.Dd})
      for (auto& row : *slot)
        for (auto& f : row) f = random_function_of_u(r, D, 2);
    EXPECT_TRUE(check_skew(skew_normalize(raw).series()).holds);
  }
}

TEST(Miura, FunctionOfU) {
  RandomElements r(dncohom::testing::kDefaultSeed + 23, "miura");
  const MultiIndex zero(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto F = random_function_of_u(r, 2, 4);
    const auto F1 = partial_u(zero, F), F2 = partial_u(zero, F1);
    const auto expect = LambdaSeries::constant(F1 * Rational(2)) * lam(2, 2) + LambdaSeries::constant(F2 * uj(2, {0, 1}));
    EXPECT_EQ(miura_first_order(F, lam(2, 2)), expect) << F.to_string();
  }
  EXPECT_TRUE(miura_first_order(SDP::constant(2, 7), lam(2, 2)).is_zero());
}

TEST(Miura, CoboundariesAreCocycles) {
  RandomElements r(dncohom::testing::kDefaultSeed + 24, "miura cocycle");
  for (int trial = 0; trial < 15; ++trial) {
    const int D = r.uniform(2, 3);
    const auto F = r.poly(D, 0, r.uniform(0, 2), 2, 3);
    const auto B = LambdaSeries::symbol(D, D);
    const auto m = miura_first_order(F, B);
    EXPECT_TRUE(check_skew(m).holds) << F.to_string();
    EXPECT_TRUE(deformation_residual(m, B).is_zero()) << F.to_string();
  }
}

TEST(Degree2Template, SolutionsAreMiuraTrivial) {
  const int M = 2;
  const auto t = DeformationAnsatz::degree2_template(2, M);
  EXPECT_EQ(t.basis.size(), 12u);
  for (const auto& b : t.basis) EXPECT_TRUE(check_skew(b).holds);
  EXPECT_EQ(skew_system(t).rank(), 0u);
  const auto kernel = deformation_system(t, lam(2, 2)).solution_dim();

  // The kernel is B^{12} = -B^{21} = B(u) with deg B <= M, one dimension per
  // power of u. Each is the Miura image of F = u_{x^1} times an antiderivative
  // of B, which has one more power of u.
  EXPECT_EQ(kernel, static_cast<std::size_t>(M + 1));
  std::vector<LambdaSeries> miura;
  for (int k = 0; k <= M; ++k) miura.push_back(miura_first_order(u_pow(2, k + 1) * uj(2, {1, 0}), lam(2, 2)));
  auto joint = t.basis;
  joint.insert(joint.end(), miura.begin(), miura.end());
  EXPECT_EQ(series_rank(joint), series_rank(t.basis));
  EXPECT_EQ(kernel, series_rank(miura));
}

TEST(Solve, FirstCohomology) {
  for (int D = 1; D <= 4; ++D) {
    EXPECT_EQ(solve_h1(D, 0, 2), 1) << D;
    EXPECT_EQ(solve_h1(D, 1, 2), D - 1) << D;
    EXPECT_EQ(solve_h1(D, 2, 2), 0) << D;
  }
}

TEST(Solve, SecondCohomology) {
  EXPECT_EQ(solve_h2(2, 1, 2), 1);
  EXPECT_EQ(solve_h2(2, 2, 2), 0);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(solve_h2(2, d, 2), poisson_dim(2, 2, d)) << d;
  for (int d = 0; d <= 2; ++d) EXPECT_EQ(solve_h2(3, d, 2), poisson_dim(3, 2, d)) << d;
}

TEST(Solve, RejectsUnsupportedInput) {
  EXPECT_THROW(solve_h1(LambdaSeries::constant(SDP::u(2)) * lam(2, 1), 1, 2), std::invalid_argument);
  EXPECT_THROW(solve_h1(2, 1, 0), std::invalid_argument);
  EXPECT_THROW(solve_h2(2, -1, 2), std::invalid_argument);
}

TEST(Solve, InvariantUnderNormalization) {
  const auto B = LambdaSeries::linear({Rational(3), Rational(-1, 2)});
  for (int d = 0; d <= 2; ++d) EXPECT_EQ(solve_h1(B, d, 2), solve_h1(2, d, 2));
}
