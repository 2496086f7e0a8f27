#include "dncohom/superpoly.hpp"

#include <algorithm>
#include <tuple>

#include "dncohom/grading.hpp"

namespace dncohom {

int SuperMonomial::standard_degree() const noexcept {
  int d = 0;
  for (const auto& [S, e] : jets) d += S.degree() * e;
  for (const auto& T : thetas) d += T.degree();
  return d;
}

int SuperMonomial::weight() const noexcept {
  int w = u0 + static_cast<int>(thetas.size());
  for (const auto& [S, e] : jets) w += e;
  return w;
}

int SuperMonomial::exponent(const MultiIndex& S) const noexcept {
  if (S.is_zero()) return u0;
  for (const auto& [T, e] : jets)
    if (T == S) return e;
  return 0;
}

bool SuperMonomial::has_theta(const MultiIndex& T) const noexcept {
  return std::binary_search(thetas.begin(), thetas.end(), T);
}

void SuperMonomial::multiply_u(const MultiIndex& S, int k) {
  if (S.is_zero()) {
    u0 += k;
    if (u0 < 0) throw std::logic_error("SuperMonomial: negative exponent");
    return;
  }
  auto it = std::lower_bound(jets.begin(), jets.end(), S, [](const auto& p, const MultiIndex& s) { return p.first < s; });
  if (it != jets.end() && it->first == S) {
    it->second += k;
    if (it->second < 0) throw std::logic_error("SuperMonomial: negative exponent");
    if (it->second == 0) jets.erase(it);
  } else {
    if (k < 0) throw std::logic_error("SuperMonomial: negative exponent");
    if (k > 0) jets.insert(it, {S, k});
  }
}

std::string SuperMonomial::to_string() const {
  std::string s;
  auto append = [&](const std::string& x) {
    if (!s.empty()) s += "*";
    s += x;
  };
  if (u0 == 1) append("u");
  else if (u0 > 1) append("u^" + std::to_string(u0));
  for (const auto& [S, e] : jets) append("u" + S.to_string() + (e > 1 ? "^" + std::to_string(e) : ""));
  for (const auto& T : thetas) append("th" + T.to_string());
  return s.empty() ? "1" : s;
}

std::pair<SuperMonomial, int> multiply_monomials(const SuperMonomial& a, const SuperMonomial& b) {
  SuperMonomial r = a;
  r.u0 += b.u0;
  for (const auto& [S, e] : b.jets) r.multiply_u(S, e);
  r.thetas.insert(r.thetas.end(), b.thetas.begin(), b.thetas.end());
  const int sign = canonicalize_odd(r.thetas);
  return {std::move(r), sign};
}

SuperDiffPolynomial::SuperDiffPolynomial(int D, Truncation t) : D_(D), trunc_(t) {
  if (D < 1 || D > static_cast<int>(kMaxIndexDim)) throw std::invalid_argument("SuperDiffPolynomial: D out of range");
  if (t.d_max < 0 || t.u_max < 0) throw std::invalid_argument("SuperDiffPolynomial: negative truncation");
}

SuperDiffPolynomial SuperDiffPolynomial::constant(int D, const Rational& c, Truncation t) {
  SuperDiffPolynomial f(D, t);
  f.add_term(SuperMonomial{}, c);
  return f;
}

SuperDiffPolynomial SuperDiffPolynomial::u(int D, const MultiIndex& S, Truncation t) {
  if (S.dim() != static_cast<std::size_t>(D)) throw std::invalid_argument("u: multi-index has wrong dimension");
  SuperMonomial m;
  m.multiply_u(S, 1);
  return from_monomial(D, m, 1, t);
}

SuperDiffPolynomial SuperDiffPolynomial::theta(int D, const MultiIndex& T, Truncation t) {
  if (T.dim() != static_cast<std::size_t>(D)) throw std::invalid_argument("theta: multi-index has wrong dimension");
  SuperMonomial m;
  m.thetas.push_back(T);
  return from_monomial(D, m, 1, t);
}

SuperDiffPolynomial SuperDiffPolynomial::from_monomial(int D, const SuperMonomial& m, const Rational& c, Truncation t) {
  SuperDiffPolynomial f(D, t);
  f.add_term(m, c);
  return f;
}

void SuperDiffPolynomial::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.standard_degree() > trunc_.d_max)
    throw TruncationOverflow("term " + m.to_string() + " exceeds d_max = " + std::to_string(trunc_.d_max));
  if (m.u0 > trunc_.u_max)
    throw TruncationOverflow("term " + m.to_string() + " exceeds u_max = " + std::to_string(trunc_.u_max));
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperDiffPolynomial::check_compatible(const SuperDiffPolynomial& o) const {
  if (o.D_ != D_) throw std::invalid_argument("SuperDiffPolynomial: dimension mismatch");
  if (!(o.trunc_ == trunc_)) throw std::invalid_argument("SuperDiffPolynomial: truncation mismatch");
}

SuperDiffPolynomial& SuperDiffPolynomial::operator+=(const SuperDiffPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperDiffPolynomial& SuperDiffPolynomial::operator-=(const SuperDiffPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperDiffPolynomial SuperDiffPolynomial::operator*(const SuperDiffPolynomial& o) const {
  check_compatible(o);
  SuperDiffPolynomial r(D_, trunc_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      auto [m, sign] = multiply_monomials(a, b);
      if (sign != 0) r.add_term(m, ca * cb * sign);
    }
  }
  return r;
}

SuperDiffPolynomial SuperDiffPolynomial::operator*(const Rational& c) const {
  SuperDiffPolynomial r(D_, trunc_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

SuperDiffPolynomial SuperDiffPolynomial::component(int p, int d) const {
  SuperDiffPolynomial r(D_, trunc_);
  for (const auto& [m, c] : terms_)
    if (m.super_degree() == p && m.standard_degree() == d) r.terms_.emplace(m, c);
  return r;
}

std::map<std::tuple<int, int, int>, SuperDiffPolynomial> SuperDiffPolynomial::graded_components() const {
  std::map<std::tuple<int, int, int>, SuperDiffPolynomial> out;
  for (const auto& [m, c] : terms_) {
    auto key = std::tuple{m.super_degree(), m.standard_degree(), m.weight()};
    out.try_emplace(key, D_, trunc_).first->second.terms_.emplace(m, c);
  }
  return out;
}

SuperDiffPolynomial SuperDiffPolynomial::with_truncation(Truncation t) const {
  SuperDiffPolynomial r(D_, t);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

bool SuperDiffPolynomial::is_homogeneous(int p, int d) const {
  for (const auto& [m, c] : terms_)
    if (m.super_degree() != p || m.standard_degree() != d) return false;
  return true;
}

std::string SuperDiffPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + m.to_string();
  }
  return s;
}

namespace {

// Multisets of jets (|S| >= 1) of total degree d, as non-decreasing index
// sequences into `pool`.
void jet_multisets(const std::vector<MultiIndex>& pool, std::size_t start, int d, int count,
                   std::vector<std::pair<MultiIndex, int>>& cur,
                   std::vector<std::pair<std::vector<std::pair<MultiIndex, int>>, int>>& out) {
  if (d == 0) {
    out.emplace_back(cur, count);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const int s = pool[i].degree();
    if (s > d) break;
    if (!cur.empty() && cur.back().first == pool[i]) {
      ++cur.back().second;
      jet_multisets(pool, i, d - s, count + 1, cur, out);
      --cur.back().second;
    } else {
      cur.emplace_back(pool[i], 1);
      jet_multisets(pool, i, d - s, count + 1, cur, out);
      cur.pop_back();
    }
  }
}

void theta_sets(const std::vector<MultiIndex>& pool, std::size_t start, int p, int d, std::vector<MultiIndex>& cur,
                std::vector<std::vector<MultiIndex>>& out) {
  if (p == 0) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const int s = pool[i].degree();
    if (static_cast<long>(p) * s > d) break;
    cur.push_back(pool[i]);
    theta_sets(pool, i + 1, p - 1, d - s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SuperMonomial> enumerate_monomials(int D, int p, int d, int w) {
  std::vector<SuperMonomial> out;
  if (D < 1 || p < 0 || d < 0 || w < p) return out;
  std::vector<MultiIndex> theta_pool;
  std::vector<MultiIndex> jet_pool;
  for (int s = 0; s <= d; ++s) {
    for (auto& S : multi_indices_of_degree(D, s)) {
      if (s > 0) jet_pool.push_back(S);
      theta_pool.push_back(std::move(S));
    }
  }
  for (int dj = 0; dj <= d; ++dj) {
    std::vector<std::pair<std::vector<std::pair<MultiIndex, int>>, int>> jets;
    std::vector<std::pair<MultiIndex, int>> cur;
    jet_multisets(jet_pool, 0, dj, 0, cur, jets);
    std::vector<std::vector<MultiIndex>> thetas;
    std::vector<MultiIndex> tcur;
    theta_sets(theta_pool, 0, p, d - dj, tcur, thetas);
    for (const auto& [j, count] : jets) {
      const int u0 = w - p - count;
      if (u0 < 0) continue;
      for (const auto& t : thetas) out.push_back(SuperMonomial{u0, j, t});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dncohom
