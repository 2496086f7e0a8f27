#include "dncohom/pva.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "dncohom/grading.hpp"
#include "dncohom/varcalc.hpp"

namespace dncohom {

LambdaSeries::LambdaSeries(int D, int groups, Truncation t) : D_(D), groups_(groups), trunc_(t) {
  if (D < 1 || groups < 1 || static_cast<std::size_t>(D * groups) > kMaxIndexDim)
    throw std::invalid_argument("LambdaSeries: unsupported shape");
}

LambdaSeries LambdaSeries::constant(const SuperDiffPolynomial& f, int groups) {
  LambdaSeries s(f.D(), groups, f.truncation());
  s.add(MultiIndex(static_cast<std::size_t>(f.D() * groups)), f);
  return s;
}

LambdaSeries LambdaSeries::symbol(int D, int axis, int group, int groups, Truncation t) {
  if (axis < 1 || axis > D || group < 0 || group >= groups) throw std::out_of_range("LambdaSeries::symbol: bad index");
  LambdaSeries s(D, groups, t);
  s.add(MultiIndex::unit(static_cast<std::size_t>(D * groups), static_cast<std::size_t>(group * D + axis - 1)),
        SuperDiffPolynomial::constant(D, 1, t));
  return s;
}

LambdaSeries LambdaSeries::linear(const std::vector<Rational>& c, Truncation t) {
  const int D = static_cast<int>(c.size());
  LambdaSeries s(D, 1, t);
  for (int i = 0; i < D; ++i)
    if (c[i] != 0) s += symbol(D, i + 1, 0, 1, t) * c[i];
  return s;
}

SuperDiffPolynomial LambdaSeries::coefficient(const MultiIndex& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? SuperDiffPolynomial(D_, trunc_) : it->second;
}

void LambdaSeries::add(const MultiIndex& I, const SuperDiffPolynomial& c) {
  if (I.dim() != static_cast<std::size_t>(D_ * groups_)) throw std::invalid_argument("LambdaSeries: symbol index has wrong dimension");
  if (c.D() != D_) throw std::invalid_argument("LambdaSeries: coefficient dimension mismatch");
  if (c.is_zero()) return;
  for (const auto& [m, x] : c.terms())
    if (m.super_degree() != 0) throw std::invalid_argument("LambdaSeries: coefficients must have super degree 0");
  auto it = terms_.find(I);
  if (it == terms_.end()) {
    terms_.emplace(I, c.with_truncation(trunc_));
    return;
  }
  it->second += c.with_truncation(trunc_);
  if (it->second.is_zero()) terms_.erase(it);
}

void LambdaSeries::check_compatible(const LambdaSeries& o) const {
  if (o.D_ != D_ || o.groups_ != groups_) throw std::invalid_argument("LambdaSeries: shape mismatch");
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
  check_compatible(o);
  for (const auto& [I, c] : o.terms_) add(I, c);
  return *this;
}

LambdaSeries& LambdaSeries::operator-=(const LambdaSeries& o) {
  check_compatible(o);
  for (const auto& [I, c] : o.terms_) add(I, -c);
  return *this;
}

LambdaSeries LambdaSeries::operator*(const Rational& c) const {
  LambdaSeries r(D_, groups_, trunc_);
  if (c == 0) return r;
  for (const auto& [I, x] : terms_) r.terms_.emplace(I, x * c);
  return r;
}

LambdaSeries LambdaSeries::operator*(const LambdaSeries& o) const {
  check_compatible(o);
  LambdaSeries r(D_, groups_, trunc_);
  for (const auto& [I, a] : terms_)
    for (const auto& [J, b] : o.terms_) r.add(I + J, a * b.with_truncation(trunc_));
  return r;
}

LambdaSeries LambdaSeries::embedded(int groups, int group) const {
  if (groups_ != 1) throw std::invalid_argument("LambdaSeries::embedded: expects a one-group series");
  if (group < 0 || group >= groups) throw std::out_of_range("LambdaSeries::embedded: bad group");
  LambdaSeries r(D_, groups, trunc_);
  for (const auto& [I, c] : terms_) {
    MultiIndex J(static_cast<std::size_t>(D_ * groups));
    for (int i = 0; i < D_; ++i) J.set(static_cast<std::size_t>(group * D_ + i), I[static_cast<std::size_t>(i)]);
    r.terms_.emplace(J, c);
  }
  return r;
}

SuperDiffPolynomial LambdaSeries::at_zero() const {
  return coefficient(MultiIndex(static_cast<std::size_t>(D_ * groups_)));
}

bool LambdaSeries::has_constant_coefficients() const {
  for (const auto& [I, c] : terms_)
    for (const auto& [m, x] : c.terms())
      if (!(m == SuperMonomial{})) return false;
  return true;
}

std::string LambdaSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [I, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*l" + I.to_string();
  }
  return s;
}

namespace {

using Mask = std::vector<int>;

LambdaSeries map_coefficients(const LambdaSeries& Y, const std::function<SuperDiffPolynomial(const SuperDiffPolynomial&)>& fn) {
  LambdaSeries r(Y.D(), Y.groups(), Y.truncation());
  for (const auto& [I, c] : Y.terms()) r.add(I, fn(c));
  return r;
}

// (s_axis + d_axis) Y where s is the sum of the symbol groups in the mask.
LambdaSeries plus_step(const LambdaSeries& Y, const Mask& mask, std::size_t axis0) {
  const int D = Y.D();
  LambdaSeries r = map_coefficients(Y, [&](const SuperDiffPolynomial& c) { return d_x(static_cast<int>(axis0 + 1), c); });
  for (int g : mask) {
    const std::size_t k = static_cast<std::size_t>(g * D) + axis0;
    for (const auto& [I, c] : Y.terms()) r.add(I.raised(k), c);
  }
  return r;
}

LambdaSeries plus_power(LambdaSeries Y, const Mask& mask, const MultiIndex& I) {
  for (std::size_t a = 0; a < I.dim(); ++a)
    for (int k = 0; k < I[a]; ++k) Y = plus_step(Y, mask, a);
  return Y;
}

LambdaSeries minus_power(LambdaSeries Y, const Mask& mask, const MultiIndex& I) {
  for (std::size_t a = 0; a < I.dim(); ++a)
    for (int k = 0; k < I[a]; ++k) Y = plus_step(Y, mask, a) * Rational(-1);
  return Y;
}

std::vector<MultiIndex> series_u_variables(const LambdaSeries& Y) {
  std::set<MultiIndex> s;
  for (const auto& [I, c] : Y.terms())
    for (const auto& S : u_variables(c)) s.insert(S);
  return {s.begin(), s.end()};
}

LambdaSeries series_partial_u(const LambdaSeries& Y, const MultiIndex& S) {
  return map_coefficients(Y, [&](const SuperDiffPolynomial& c) { return partial_u(S, c); });
}

// {f_s g} with s = sum of the masked symbol groups, f and g series in the
// same groups and B a one-group generator bracket.
LambdaSeries bracket(const LambdaSeries& f, const LambdaSeries& g, const LambdaSeries& B, const Mask& mask) {
  if (f.D() != B.D() || g.D() != B.D()) throw std::invalid_argument("bracket: dimension mismatch");
  if (B.groups() != 1) throw std::invalid_argument("bracket: the generator bracket has one symbol group");
  const int G = f.groups();
  LambdaSeries Z(f.D(), G, f.truncation());
  for (const auto& L : series_u_variables(f)) Z += minus_power(series_partial_u(f, L), mask, L);
  LambdaSeries W(f.D(), G, f.truncation());
  for (const auto& [I, b] : B.terms()) {
    const auto coeff = LambdaSeries::constant(b.with_truncation(f.truncation()), G);
    W += coeff * plus_power(Z, mask, I);
  }
  LambdaSeries R(f.D(), G, f.truncation());
  for (const auto& M : series_u_variables(g)) R += series_partial_u(g, M) * plus_power(W, mask, M);
  return R;
}

// {u_l X(m)} - {u_m X(l)} - {X(l)_{l+m} u} with outer generator bracket B.
LambdaSeries jacobi_form(const LambdaSeries& outer, const LambdaSeries& inner) {
  const auto U = LambdaSeries::constant(SuperDiffPolynomial::u(outer.D(), inner.truncation()), 2);
  const auto in_l = inner.embedded(2, 0);
  const auto in_m = inner.embedded(2, 1);
  return bracket(U, in_m, outer, {0}) - bracket(U, in_l, outer, {1}) - bracket(in_l, U, outer, {0, 1});
}

LambdaSeries skew_residual(const LambdaSeries& B) {
  LambdaSeries r = B;
  for (const auto& [I, c] : B.terms()) r += minus_power(LambdaSeries::constant(c), {0}, I);
  return r;
}

LambdaSeries deformation_residual_unchecked(const LambdaSeries& Bt, const LambdaSeries& B) {
  return jacobi_form(B, Bt) + jacobi_form(Bt, B);
}

void require_generator_bracket(const LambdaSeries& B, const char* what) {
  if (B.groups() != 1) throw std::invalid_argument(std::string(what) + ": expects a one-group bracket");
}

// Each residual becomes one column; each (symbol monomial, coefficient
// monomial) pair one equation.
LinearSystem assemble(const std::vector<LambdaSeries>& residuals) {
  std::map<std::pair<MultiIndex, SuperMonomial>, std::size_t> eq_of;
  LinearSystem sys;
  sys.unknowns = residuals.size();
  for (std::size_t j = 0; j < residuals.size(); ++j) {
    for (const auto& [I, c] : residuals[j].terms()) {
      for (const auto& [m, x] : c.terms()) {
        auto [it, inserted] = eq_of.try_emplace({I, m}, sys.equations.size());
        if (inserted) sys.equations.emplace_back();
        sys.equations[it->second].emplace_back(j, x);
      }
    }
  }
  return sys;
}

}  // namespace

LambdaSeries master_bracket(const SuperDiffPolynomial& f, const SuperDiffPolynomial& g, const LambdaSeries& B) {
  require_generator_bracket(B, "master_bracket");
  if (f.D() != B.D() || g.D() != B.D()) throw std::invalid_argument("master_bracket: dimension mismatch");
  return bracket(LambdaSeries::constant(f), LambdaSeries::constant(g.with_truncation(f.truncation())), B, {0});
}

AxiomCheck check_skew(const LambdaSeries& B) {
  require_generator_bracket(B, "check_skew");
  AxiomCheck c;
  c.residual = skew_residual(B);
  c.holds = c.residual.is_zero();
  return c;
}

AxiomCheck check_jacobi(const LambdaSeries& B) {
  require_generator_bracket(B, "check_jacobi");
  if (!check_skew(B).holds) throw std::invalid_argument("check_jacobi: non-skew input");
  AxiomCheck c;
  c.residual = jacobi_form(B, B);
  c.holds = c.residual.is_zero();
  return c;
}

LambdaSeries symmetry_residual(const SuperDiffPolynomial& X, const LambdaSeries& B) {
  require_generator_bracket(B, "symmetry_residual");
  const auto Xt = X.with_truncation(B.truncation());
  LambdaSeries lhs(B.D(), 1, B.truncation());
  for (const auto& [I, b] : B.terms()) {
    SuperDiffPolynomial xb(B.D(), B.truncation());
    for (const auto& S : u_variables(b)) xb += d_multi(S, Xt) * partial_u(S, b);
    lhs.add(I, xb);
  }
  const auto u = SuperDiffPolynomial::u(B.D(), B.truncation());
  return lhs - master_bracket(Xt, u, B) - master_bracket(u, Xt, B);
}

LambdaSeries deformation_residual(const LambdaSeries& Btilde, const LambdaSeries& B) {
  require_generator_bracket(B, "deformation_residual");
  require_generator_bracket(Btilde, "deformation_residual");
  if (!check_skew(Btilde).holds) throw std::invalid_argument("deformation_residual: non-skew input");
  return deformation_residual_unchecked(Btilde, B);
}

LambdaSeries miura_first_order(const SuperDiffPolynomial& F, const LambdaSeries& B) {
  require_generator_bracket(B, "miura_first_order");
  const auto Ft = F.with_truncation(B.truncation());
  const auto u = SuperDiffPolynomial::u(B.D(), B.truncation());
  return master_bracket(Ft, u, B) + master_bracket(u, Ft, B);
}

Degree2Slots Degree2Slots::zero(int D, Truncation t) {
  Degree2Slots s;
  s.D = D;
  const std::vector<std::vector<SuperDiffPolynomial>> z(
      static_cast<std::size_t>(D), std::vector<SuperDiffPolynomial>(static_cast<std::size_t>(D), SuperDiffPolynomial(D, t)));
  s.A = s.B = s.C = s.Dd = z;
  return s;
}

LambdaSeries Degree2Slots::series() const {
  const Truncation t = B.empty() || B[0].empty() ? Truncation{} : B[0][0].truncation();
  const auto n = static_cast<std::size_t>(D);
  LambdaSeries s(D, 1, t);
  const MultiIndex zero(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ua = SuperDiffPolynomial::u(D, MultiIndex::unit(n, a), t);
      const auto ub = SuperDiffPolynomial::u(D, MultiIndex::unit(n, b), t);
      s.add(zero.raised(a).raised(b), A[a][b]);
      s.add(zero.raised(a), B[a][b] * ub);
      s.add(zero, C[a][b] * ua * ub);
      s.add(zero, Dd[a][b] * SuperDiffPolynomial::u(D, zero.raised(a).raised(b), t));
    }
  }
  return s;
}

Degree2Slots skew_normalize(const Degree2Slots& raw) {
  const auto n = static_cast<std::size_t>(raw.D);
  if (raw.D < 1) throw std::invalid_argument("skew_normalize: template mismatch (D < 1)");
  for (const auto* slot : {&raw.A, &raw.B, &raw.C, &raw.Dd}) {
    if (slot->size() != n) throw std::invalid_argument("skew_normalize: template mismatch (slot shape)");
    for (const auto& row : *slot) {
      if (row.size() != n) throw std::invalid_argument("skew_normalize: template mismatch (slot shape)");
      for (const auto& f : row) {
        if (f.D() != raw.D) throw std::invalid_argument("skew_normalize: template mismatch (dimension)");
        for (const auto& [m, c] : f.terms())
          if (!m.jets.empty() || !m.thetas.empty())
            throw std::invalid_argument("skew_normalize: template mismatch (slots must be functions of u)");
      }
    }
  }
  Degree2Slots out = raw;
  const MultiIndex zero(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto sum = raw.B[a][b] + raw.B[b][a];
      out.A[a][b] = SuperDiffPolynomial(raw.D, sum.truncation());
      out.C[a][b] = partial_u(zero, sum) * (Rational(1) / 4);
      out.Dd[a][b] = sum * (Rational(1) / 4);
    }
  }
  return out;
}

std::size_t LinearSystem::rank() const { return exact_rank(equations); }

VectorFieldAnsatz VectorFieldAnsatz::generic(int D, int d, int w, Truncation t) {
  VectorFieldAnsatz a;
  a.D = D;
  a.d = d;
  a.w = w;
  for (const auto& m : enumerate_monomials(D, 0, d, w)) a.basis.push_back(SuperDiffPolynomial::from_monomial(D, m, 1, t));
  return a;
}

DeformationAnsatz DeformationAnsatz::generic(int D, int d, int w, Truncation t) {
  DeformationAnsatz a;
  a.D = D;
  a.d = d;
  a.w = w;
  for (int k = 0; k <= d; ++k) {
    for (const auto& I : multi_indices_of_degree(D, k)) {
      for (const auto& m : enumerate_monomials(D, 0, d - k, w)) {
        LambdaSeries s(D, 1, t);
        s.add(I, SuperDiffPolynomial::from_monomial(D, m, 1, t));
        a.basis.push_back(std::move(s));
      }
    }
  }
  return a;
}

DeformationAnsatz DeformationAnsatz::degree2_template(int D, int M, Truncation t) {
  DeformationAnsatz a;
  a.D = D;
  a.d = 2;
  a.w = -1;
  const auto n = static_cast<std::size_t>(D);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int k = 0; k <= M; ++k) {
        auto raw = Degree2Slots::zero(D, t);
        SuperMonomial m;
        m.u0 = k;
        raw.B[i][j] = SuperDiffPolynomial::from_monomial(D, m, 1, t);
        a.basis.push_back(skew_normalize(raw).series());
      }
    }
  }
  return a;
}

LinearSystem symmetry_system(const VectorFieldAnsatz& X, const LambdaSeries& B) {
  std::vector<LambdaSeries> residuals;
  residuals.reserve(X.basis.size());
  for (const auto& x : X.basis) residuals.push_back(symmetry_residual(x, B));
  return assemble(residuals);
}

LinearSystem deformation_system(const DeformationAnsatz& ansatz, const LambdaSeries& B) {
  require_generator_bracket(B, "deformation_system");
  std::vector<LambdaSeries> residuals;
  residuals.reserve(ansatz.basis.size());
  for (const auto& b : ansatz.basis) residuals.push_back(deformation_residual_unchecked(b, B));
  return assemble(residuals);
}

LinearSystem skew_system(const DeformationAnsatz& ansatz) {
  std::vector<LambdaSeries> residuals;
  residuals.reserve(ansatz.basis.size());
  for (const auto& b : ansatz.basis) residuals.push_back(skew_residual(b));
  return assemble(residuals);
}

namespace {

void require_constant_bracket(const LambdaSeries& B, const char* what) {
  require_generator_bracket(B, what);
  if (!B.has_constant_coefficients())
    throw std::invalid_argument(std::string(what) + ": the weight grading needs a constant-coefficient bracket");
}

// Rank of the coboundary vectors inside the coordinate space of `basis`.
template <typename Vec, typename Key>
std::size_t span_rank(const std::vector<Vec>& vectors, const std::map<Key, std::size_t>& index,
                      const std::function<std::vector<std::pair<Key, Rational>>(const Vec&)>& flatten) {
  std::vector<SparseRow<Rational>> rows;
  for (const auto& v : vectors) {
    SparseRow<Rational> row;
    for (const auto& [k, x] : flatten(v)) row.emplace_back(index.at(k), x);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

std::int64_t h1_at_weight(const LambdaSeries& B, int d, int w) {
  const int D = B.D();
  const auto X = VectorFieldAnsatz::generic(D, d, w, B.truncation());
  const auto z = static_cast<std::int64_t>(symmetry_system(X, B).solution_dim());
  if (d < 1) return z;
  std::map<SuperMonomial, std::size_t> index;
  for (std::size_t i = 0; i < X.basis.size(); ++i) index.emplace(X.basis[i].terms().begin()->first, i);
  std::vector<SuperDiffPolynomial> hamiltonian;
  const auto u = SuperDiffPolynomial::u(D, B.truncation());
  for (const auto& m : enumerate_monomials(D, 0, d - 1, w + 1))
    hamiltonian.push_back(master_bracket(SuperDiffPolynomial::from_monomial(D, m, 1, B.truncation()), u, B).at_zero());
  const auto b = span_rank<SuperDiffPolynomial, SuperMonomial>(hamiltonian, index, [](const SuperDiffPolynomial& f) {
    return std::vector<std::pair<SuperMonomial, Rational>>(f.terms().begin(), f.terms().end());
  });
  return z - static_cast<std::int64_t>(b);
}

std::int64_t h2_at_weight(const LambdaSeries& B, int d, int w) {
  const int D = B.D();
  const auto ansatz = DeformationAnsatz::generic(D, d, w, B.truncation());
  auto sys = skew_system(ansatz);
  const auto defo = deformation_system(ansatz, B);
  sys.equations.insert(sys.equations.end(), defo.equations.begin(), defo.equations.end());
  const auto z = static_cast<std::int64_t>(sys.solution_dim());
  if (d < 1) return z;
  using Key = std::pair<MultiIndex, SuperMonomial>;
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < ansatz.basis.size(); ++i) {
    const auto& [I, c] = *ansatz.basis[i].terms().begin();
    index.emplace(Key{I, c.terms().begin()->first}, i);
  }
  std::vector<LambdaSeries> miura;
  for (const auto& m : enumerate_monomials(D, 0, d - 1, w + 1))
    miura.push_back(miura_first_order(SuperDiffPolynomial::from_monomial(D, m, 1, B.truncation()), B));
  const auto b = span_rank<LambdaSeries, Key>(miura, index, [](const LambdaSeries& s) {
    std::vector<std::pair<Key, Rational>> out;
    for (const auto& [I, c] : s.terms())
      for (const auto& [m, x] : c.terms()) out.emplace_back(Key{I, m}, x);
    return out;
  });
  return z - static_cast<std::int64_t>(b);
}

template <typename F>
std::int64_t sum_weights(const LambdaSeries& B, int d, int M, F&& at_weight, const char* what) {
  require_constant_bracket(B, what);
  if (d < 0 || M < 1) throw std::invalid_argument(std::string(what) + ": requires d >= 0 and M >= 1");
  std::int64_t total = 0;
  for (int w = 0; w <= M; ++w) total += at_weight(B, d, w);
  if (at_weight(B, d, M + 1) != 0)
    throw TruncationUnstable(std::string(what) + ": truncation unstable at d = " + std::to_string(d) +
                             ", M = " + std::to_string(M));
  return total;
}

LambdaSeries standard_bracket(int D) { return LambdaSeries::symbol(D, D); }

}  // namespace

std::int64_t solve_h1(const LambdaSeries& B, int d, int M) { return sum_weights(B, d, M, h1_at_weight, "solve_h1"); }
std::int64_t solve_h1(int D, int d, int M) { return solve_h1(standard_bracket(D), d, M); }
std::int64_t solve_h2(const LambdaSeries& B, int d, int M) { return sum_weights(B, d, M, h2_at_weight, "solve_h2"); }
std::int64_t solve_h2(int D, int d, int M) { return solve_h2(standard_bracket(D), d, M); }

}  // namespace dncohom
