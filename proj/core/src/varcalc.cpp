#include "dncohom/varcalc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "quotient_cache.hpp"

namespace dncohom {

namespace {

void check_axis(const SuperDiffPolynomial& f, int axis) {
  if (axis < 1 || axis > f.D()) throw std::out_of_range("d_x: axis must lie in 1..D");
}

int super_degree_of(const SuperDiffPolynomial& f) {
  if (f.is_zero()) return -1;
  const int p = f.terms().begin()->first.super_degree();
  for (const auto& [m, c] : f.terms())
    if (m.super_degree() != p) throw std::invalid_argument("expected an element of uniform super degree");
  return p;
}

}  // namespace

SuperDiffPolynomial d_x(int axis, const SuperDiffPolynomial& f) {
  check_axis(f, axis);
  const std::size_t D = static_cast<std::size_t>(f.D());
  const std::size_t a = static_cast<std::size_t>(axis - 1);
  const MultiIndex xi = MultiIndex::unit(D, a);
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& [m, c] : f.terms()) {
    if (m.u0 > 0) {
      SuperMonomial r = m;
      r.u0 -= 1;
      r.multiply_u(xi, 1);
      out.add_term(r, c * m.u0);
    }
    for (const auto& [S, e] : m.jets) {
      SuperMonomial r = m;
      r.multiply_u(S, -1);
      r.multiply_u(S.raised(a), 1);
      out.add_term(r, c * e);
    }
    for (std::size_t k = 0; k < m.thetas.size(); ++k) {
      SuperMonomial r = m;
      r.thetas[k] = r.thetas[k].raised(a);
      const int sign = canonicalize_odd(r.thetas);
      if (sign != 0) out.add_term(r, c * sign);
    }
  }
  return out;
}

SuperDiffPolynomial d_multi(const MultiIndex& S, const SuperDiffPolynomial& f) {
  if (S.dim() != static_cast<std::size_t>(f.D())) throw std::invalid_argument("d_multi: multi-index has wrong dimension");
  SuperDiffPolynomial r = f;
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (int k = 0; k < S[i]; ++k) r = d_x(static_cast<int>(i + 1), r);
  return r;
}

SuperDiffPolynomial partial_u(const MultiIndex& S, const SuperDiffPolynomial& f) {
  if (S.dim() != static_cast<std::size_t>(f.D())) throw std::invalid_argument("partial_u: multi-index has wrong dimension");
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(S);
    if (e == 0) continue;
    SuperMonomial r = m;
    r.multiply_u(S, -1);
    out.add_term(r, c * e);
  }
  return out;
}

SuperDiffPolynomial partial_theta(const MultiIndex& T, const SuperDiffPolynomial& f) {
  if (T.dim() != static_cast<std::size_t>(f.D()))
    throw std::invalid_argument("partial_theta: multi-index has wrong dimension");
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& [m, c] : f.terms()) {
    auto it = std::lower_bound(m.thetas.begin(), m.thetas.end(), T);
    if (it == m.thetas.end() || !(*it == T)) continue;
    const auto k = it - m.thetas.begin();
    SuperMonomial r = m;
    r.thetas.erase(r.thetas.begin() + k);
    out.add_term(r, k % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

std::vector<MultiIndex> u_variables(const SuperDiffPolynomial& f) {
  std::set<MultiIndex> s;
  for (const auto& [m, c] : f.terms()) {
    if (m.u0 > 0) s.insert(MultiIndex(static_cast<std::size_t>(f.D())));
    for (const auto& [S, e] : m.jets) s.insert(S);
  }
  return {s.begin(), s.end()};
}

std::vector<MultiIndex> theta_variables(const SuperDiffPolynomial& f) {
  std::set<MultiIndex> s;
  for (const auto& [m, c] : f.terms()) s.insert(m.thetas.begin(), m.thetas.end());
  return {s.begin(), s.end()};
}

SuperDiffPolynomial delta_op(const SuperDiffPolynomial& f) {
  const std::size_t D = static_cast<std::size_t>(f.D());
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& S : u_variables(f)) {
    const auto th = SuperDiffPolynomial::theta(f.D(), S.raised(D - 1), f.truncation());
    out += th * partial_u(S, f);
  }
  return out;
}

SuperDiffPolynomial var_der_u(const SuperDiffPolynomial& f) {
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& S : u_variables(f)) {
    auto t = d_multi(S, partial_u(S, f));
    if (S.degree() % 2 == 0) out += t;
    else out -= t;
  }
  return out;
}

SuperDiffPolynomial var_der_theta(const SuperDiffPolynomial& f) {
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& T : theta_variables(f)) {
    auto t = d_multi(T, partial_theta(T, f));
    if (T.degree() % 2 == 0) out += t;
    else out -= t;
  }
  return out;
}

bool operator==(const QuotientClass& a, const QuotientClass& b) {
  if (a.D() != b.D()) return false;
  const auto na = a.normalized ? a.representative : quotient_normalize(a.representative).representative;
  const auto nb = b.normalized ? b.representative : quotient_normalize(b.representative).representative;
  return na == nb;
}

QuotientClass quotient_normalize(const SuperDiffPolynomial& f) {
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& [key, part] : f.graded_components()) {
    const auto [p, d, w] = key;
    const auto comp = graded_component(f.D(), p, d, w);
    for (const auto& [col, c] : comp->echelon.reduce(comp->coordinates(part))) out.add_term(comp->basis[col], c);
  }
  return {std::move(out), true};
}

QuotientClass quotient_normalize(const SuperDiffPolynomial& f, int p, int d) {
  if (!f.is_homogeneous(p, d)) throw std::invalid_argument("quotient_normalize: f is not of the declared bi-degree");
  return quotient_normalize(f);
}

bool is_total_derivative(const SuperDiffPolynomial& f) { return quotient_normalize(f).representative.is_zero(); }

QuotientClass schouten(const QuotientClass& P, const QuotientClass& Q) {
  if (P.D() != Q.D()) throw std::invalid_argument("schouten: dimension mismatch");
  const int p = super_degree_of(P.representative);
  const auto& f = P.representative;
  const auto& g = Q.representative;
  SuperDiffPolynomial r = var_der_theta(f) * var_der_u(g);
  const auto second = var_der_u(f) * var_der_theta(g);
  if (p % 2 == 0) r += second;
  else r -= second;
  return quotient_normalize(r);
}

SuperDiffPolynomial d_operator(const QuotientClass& P, const SuperDiffPolynomial& f) {
  if (P.D() != f.D()) throw std::invalid_argument("d_operator: dimension mismatch");
  const int p = super_degree_of(P.representative);
  const auto a = var_der_theta(P.representative);
  const auto b = var_der_u(P.representative);
  SuperDiffPolynomial out(f.D(), f.truncation());
  for (const auto& S : u_variables(f)) out += d_multi(S, a).with_truncation(f.truncation()) * partial_u(S, f);
  for (const auto& T : theta_variables(f)) {
    auto t = d_multi(T, b).with_truncation(f.truncation()) * partial_theta(T, f);
    if (p % 2 == 0) out += t;
    else out -= t;
  }
  return out;
}

namespace {

void iota_rec(const SuperDiffPolynomial& current, std::size_t k, const std::vector<SuperDiffPolynomial>& var_ders,
              const SuperDiffPolynomial& factor, SuperDiffPolynomial& acc) {
  if (k == var_ders.size()) {
    acc += current * factor;
    return;
  }
  for (const auto& S : theta_variables(current)) {
    const auto next = partial_theta(S, current);
    if (next.is_zero()) continue;
    iota_rec(next, k + 1, var_ders, factor * d_multi(S, var_ders[k]), acc);
  }
}

}  // namespace

QuotientClass iota_eval(const QuotientClass& P, const std::vector<SuperDiffPolynomial>& functionals) {
  const auto& rep = P.representative;
  if (rep.is_zero()) return {SuperDiffPolynomial(rep.D(), rep.truncation()), true};
  const int p = super_degree_of(rep);
  if (static_cast<std::size_t>(p) != functionals.size())
    throw std::invalid_argument("iota_eval: expected one functional per theta factor");
  std::vector<SuperDiffPolynomial> var_ders;
  for (const auto& I : functionals) {
    if (I.D() != rep.D()) throw std::invalid_argument("iota_eval: dimension mismatch");
    if (!I.is_zero() && super_degree_of(I) != 0) throw std::invalid_argument("iota_eval: functionals must have super degree 0");
    var_ders.push_back(var_der_u(I.with_truncation(rep.truncation())));
  }
  SuperDiffPolynomial acc(rep.D(), rep.truncation());
  iota_rec(rep, 0, var_ders, SuperDiffPolynomial::constant(rep.D(), 1, rep.truncation()), acc);
  return quotient_normalize(acc);
}

QuotientClass standard_bivector(int D, Truncation t) {
  const MultiIndex zero(static_cast<std::size_t>(D));
  const auto P = SuperDiffPolynomial::theta(D, zero, t) * SuperDiffPolynomial::theta(D, zero.raised(D - 1), t) * (Rational(1) / 2);
  return quotient_normalize(P);
}

}  // namespace dncohom
