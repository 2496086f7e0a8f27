#include "dncohom/theta.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "dncohom/grading.hpp"

namespace dncohom {

ThetaMonomial::ThetaMonomial(std::vector<MultiIndex> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 1; i < gens_.size(); ++i)
    if (!(gens_[i - 1] < gens_[i])) throw std::invalid_argument("ThetaMonomial: generators must be strictly ascending");
}

int ThetaMonomial::standard_degree() const noexcept {
  int d = 0;
  for (const auto& g : gens_) d += g.degree();
  return d;
}

MultiIndex ThetaMonomial::multi_degree(std::size_t gen_dim) const {
  MultiIndex m(gen_dim);
  for (const auto& g : gens_) m = m + g;
  return m;
}

std::string ThetaMonomial::to_string() const {
  if (gens_.empty()) return "1";
  std::string s;
  for (const auto& g : gens_) s += "th" + g.to_string();
  return s;
}

ThetaPolynomial::ThetaPolynomial(int D) : D_(D) {
  if (D < 1) throw std::invalid_argument("ThetaPolynomial: D must be >= 1");
}

ThetaPolynomial ThetaPolynomial::monomial(int D, std::vector<MultiIndex> generators, const Rational& coeff) {
  ThetaPolynomial f(D);
  for (const auto& g : generators)
    if (g.dim() != static_cast<std::size_t>(D - 1)) throw std::invalid_argument("theta generator has wrong dimension");
  const int sign = canonicalize_odd(generators);
  if (sign != 0) f.add_term(ThetaMonomial(std::move(generators)), coeff * sign);
  return f;
}

void ThetaPolynomial::add_term(const ThetaMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ThetaPolynomial& ThetaPolynomial::operator+=(const ThetaPolynomial& o) {
  if (o.D_ != D_) throw std::invalid_argument("ThetaPolynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ThetaPolynomial& ThetaPolynomial::operator-=(const ThetaPolynomial& o) {
  if (o.D_ != D_) throw std::invalid_argument("ThetaPolynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ThetaPolynomial ThetaPolynomial::operator*(const ThetaPolynomial& o) const {
  if (o.D_ != D_) throw std::invalid_argument("ThetaPolynomial: dimension mismatch");
  ThetaPolynomial r(D_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      std::vector<MultiIndex> g = a.generators();
      g.insert(g.end(), b.generators().begin(), b.generators().end());
      const int sign = canonicalize_odd(g);
      if (sign != 0) r.add_term(ThetaMonomial(std::move(g)), ca * cb * sign);
    }
  }
  return r;
}

ThetaPolynomial ThetaPolynomial::operator*(const Rational& c) const {
  ThetaPolynomial r(D_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

ThetaPolynomial ThetaPolynomial::component(int p, int d) const {
  ThetaPolynomial r(D_);
  for (const auto& [m, c] : terms_)
    if (m.super_degree() == p && m.standard_degree() == d) r.terms_.emplace(m, c);
  return r;
}

std::string ThetaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + m.to_string();
  }
  return s;
}

namespace {

// theta^S -> theta^{S + xi_axis} applied to one monomial; returns (monomial, sign) pairs.
void differentiate_monomial(const ThetaMonomial& m, std::size_t axis0, const Rational& c, ThetaPolynomial& out) {
  const auto& g = m.generators();
  for (std::size_t k = 0; k < g.size(); ++k) {
    std::vector<MultiIndex> h = g;
    h[k] = h[k].raised(axis0);
    const int sign = canonicalize_odd(h);
    if (sign != 0) out.add_term(ThetaMonomial(std::move(h)), c * sign);
  }
}

void check_axis(int D, int axis) {
  if (axis < 1 || axis > D - 1) throw std::out_of_range("theta derivation axis must lie in 1..D-1");
}

void enumerate_rec(const std::vector<MultiIndex>& gens, std::size_t start, int p, int d, std::vector<MultiIndex>& cur,
                   std::vector<ThetaMonomial>& out) {
  if (p == 0) {
    if (d == 0) out.emplace_back(cur);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i) {
    const int s = gens[i].degree();
    // The remaining p generators all have degree >= s.
    if (static_cast<long>(p) * s > d) break;
    cur.push_back(gens[i]);
    enumerate_rec(gens, i + 1, p - 1, d - s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ThetaPolynomial partial_theta(int axis, const ThetaPolynomial& f) {
  check_axis(f.D(), axis);
  ThetaPolynomial out(f.D());
  for (const auto& [m, c] : f.terms()) differentiate_monomial(m, static_cast<std::size_t>(axis - 1), c, out);
  return out;
}

std::vector<ThetaMonomial> enumerate_basis(int D, int p, int d) {
  if (D < 1) throw std::invalid_argument("enumerate_basis: D must be >= 1");
  std::vector<ThetaMonomial> out;
  if (p < 0 || d < 0) return out;
  std::vector<MultiIndex> gens;
  for (int s = 0; s <= d; ++s) {
    auto level = multi_indices_of_degree(D - 1, s);
    gens.insert(gens.end(), level.begin(), level.end());
  }
  std::vector<MultiIndex> cur;
  enumerate_rec(gens, 0, p, d, cur, out);
  return out;
}

SparseRationalMatrix image_matrix(int D, int p, int d) {
  if (D < 1) throw std::invalid_argument("image_matrix: D must be >= 1");
  const auto target = enumerate_basis(D, p, d);
  const auto domain = d >= 1 ? enumerate_basis(D, p, d - 1) : std::vector<ThetaMonomial>{};
  std::map<ThetaMonomial, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);
  const std::size_t axes = static_cast<std::size_t>(D - 1);
  SparseRationalMatrix m(target.size(), axes * domain.size());
  for (std::size_t a = 0; a < axes; ++a) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      ThetaPolynomial img(D);
      differentiate_monomial(domain[j], a, 1, img);
      for (const auto& [mono, c] : img.terms()) m.set(row_of.at(mono), a * domain.size() + j, c);
    }
  }
  return m;
}

std::size_t image_rank(int D, int p, int d) {
  if (D < 2 || d < 1) return 0;
  const auto target = enumerate_basis(D, p, d);
  const auto domain = enumerate_basis(D, p, d - 1);
  const std::size_t gen_dim = static_cast<std::size_t>(D - 1);
  std::map<ThetaMonomial, std::size_t> col_of;
  for (std::size_t i = 0; i < target.size(); ++i) col_of.emplace(target[i], i);

  // d_axis raises the fine multi-degree by xi_axis, so images sort into
  // independent blocks keyed by the target multi-degree.
  std::map<MultiIndex, std::vector<SparseRow<Rational>>> blocks;
  for (const auto& m : domain) {
    const MultiIndex md = m.multi_degree(gen_dim);
    for (std::size_t a = 0; a < gen_dim; ++a) {
      ThetaPolynomial img(D);
      differentiate_monomial(m, a, 1, img);
      if (img.is_zero()) continue;
      SparseRow<Rational> row;
      for (const auto& [mono, c] : img.terms()) row.emplace_back(col_of.at(mono), c);
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      blocks[md.raised(a)].push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (const auto& [md, rows] : blocks) rank += exact_rank(rows);
  return rank;
}

std::int64_t h_theta_dim(int D, int p, int d) {
  if (D < 1) throw std::invalid_argument("h_theta_dim: D must be >= 1");
  if (p < 0 || d < 0) return 0;
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::int64_t> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({D, p, d}); it != cache.end()) return it->second;
  }
  const std::int64_t dim = theta_dim(D, p, d);
  const std::int64_t value = dim - static_cast<std::int64_t>(image_rank(D, p, d));
  std::lock_guard lock(mutex);
  cache.emplace(std::tuple{D, p, d}, value);
  return value;
}

}  // namespace dncohom
