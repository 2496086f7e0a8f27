#include "dncohom/sparse_matrix.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

namespace dncohom {

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t n) {
  SparseRationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::size_t SparseRationalMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseRationalMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("SparseRationalMatrix index out of range");
}

void SparseRationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check(r, c);
  if (value == 0) rows_[r].erase(c);
  else rows_[r][c] = value;
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  check(r, c);
  if (value == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) rows_[r].erase(it);
  }
}

Rational SparseRationalMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

std::size_t SparseRationalMatrix::append_row() {
  rows_.emplace_back();
  return rows_.size() - 1;
}

void SparseRationalMatrix::resize_cols(std::size_t cols) {
  if (cols < cols_)
    for (const auto& r : rows_)
      if (!r.empty() && r.rbegin()->first >= cols) throw std::invalid_argument("resize_cols would drop entries");
  cols_ = cols;
}

SparseRationalMatrix SparseRationalMatrix::transposed() const {
  SparseRationalMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  return t;
}

namespace {

using IntRow = SparseRow<Integer>;

IntRow to_primitive_integer_row(const SparseRow<Rational>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& [c, v] : row) {
    Integer x = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(c, std::move(x));
  }
  if (g > 1)
    for (auto& [c, x] : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntRow& r) {
  Integer g = 0;
  for (const auto& [c, x] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, x] : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a_scale * r - b_scale * p
IntRow combine(const IntRow& r, const Integer& a_scale, const IntRow& p, const Integer& b_scale) {
  IntRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a_scale * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(b_scale * p[j].second));
      ++j;
    } else {
      Integer v = a_scale * r[i].second - b_scale * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t integer_rank(std::vector<IntRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
  std::unordered_map<std::size_t, IntRow> pivots;
  pivots.reserve(rows.size());
  for (auto& r : rows) {
    while (!r.empty()) {
      const std::size_t lead = r.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(r));
        break;
      }
      const IntRow& p = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
      Integer a = p.front().second / g;
      Integer b = r.front().second / g;
      r = combine(r, a, p, b);
      make_primitive(r);
    }
  }
  return pivots.size();
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t to_mod(const Integer& x, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_u62(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1ull << 61, (1ull << 62) - 1);
  std::uint64_t n = dist(rng) | 1ull;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

std::size_t modular_rank(const std::vector<SparseRow<Rational>>& rows, std::uint64_t prime) {
  using ModRow = SparseRow<std::uint64_t>;
  std::vector<ModRow> mrows;
  mrows.reserve(rows.size());
  for (const auto& row : rows) {
    ModRow r;
    for (const auto& [c, v] : row) {
      const std::uint64_t den = to_mod(v.get_den(), prime);
      if (den == 0) throw std::domain_error("modular_rank: denominator divisible by the prime");
      const std::uint64_t x = mulmod(to_mod(v.get_num(), prime), powmod(den, prime - 2, prime), prime);
      if (x) r.emplace_back(c, x);
    }
    mrows.push_back(std::move(r));
  }
  std::stable_sort(mrows.begin(), mrows.end(), [](const ModRow& a, const ModRow& b) { return a.size() < b.size(); });
  std::unordered_map<std::size_t, ModRow> pivots;
  for (auto& r : mrows) {
    while (!r.empty()) {
      const std::size_t lead = r.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const std::uint64_t inv = powmod(r.front().second, prime - 2, prime);
        for (auto& [c, x] : r) x = mulmod(x, inv, prime);
        pivots.emplace(lead, std::move(r));
        break;
      }
      const ModRow& p = it->second;  // leading coefficient 1
      const std::uint64_t f = r.front().second;
      ModRow out;
      out.reserve(r.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
          out.emplace_back(p[j].first, prime - mulmod(f, p[j].second, prime));
          ++j;
        } else {
          const std::uint64_t sub = mulmod(f, p[j].second, prime);
          const std::uint64_t v = r[i].second >= sub ? r[i].second - sub : r[i].second + prime - sub;
          if (v) out.emplace_back(r[i].first, v);
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  return pivots.size();
}

std::size_t exact_rank(const std::vector<SparseRow<Rational>>& rows) {
  std::vector<IntRow> irows;
  irows.reserve(rows.size());
  std::size_t nnz = 0;
  for (const auto& r : rows) {
    nnz += r.size();
    if (!r.empty()) irows.push_back(to_primitive_integer_row(r));
  }
  const std::size_t rank = integer_rank(std::move(irows));
  if (nnz > kModularCheckThreshold) {
    std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ (nnz * 0x100000001b3ull) ^ rows.size();
    for (int attempt = 0;; ++attempt) {
      try {
        const std::size_t mrank = modular_rank(rows, random_prime_u62(seed + attempt));
        if (mrank != rank)
          throw InternalError("exact_rank: integer elimination gives " + std::to_string(rank) +
                              " but modular rank gives " + std::to_string(mrank));
        break;
      } catch (const std::domain_error&) {
        if (attempt > 8) throw;
      }
    }
  }
  return rank;
}

std::size_t exact_rank(const SparseRationalMatrix& m) {
  std::vector<SparseRow<Rational>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return exact_rank(rows);
}

SparseRow<Rational> axpy(const SparseRow<Rational>& a, const Rational& factor, const SparseRow<Rational>& b) {
  SparseRow<Rational> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow<Rational> RowEchelon::reduce(SparseRow<Rational> v) const {
  std::size_t k = 0;
  while (k < v.size()) {
    auto it = pivots_.find(v[k].first);
    if (it == pivots_.end()) {
      ++k;
      continue;
    }
    // Pivot rows only touch columns >= their pivot, so entries before k stay.
    const Rational f = -v[k].second;
    v = axpy(v, f, it->second);
  }
  return v;
}

bool RowEchelon::insert(SparseRow<Rational> row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  for (auto& [c, x] : row) x /= lead;
  const std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

}  // namespace dncohom
