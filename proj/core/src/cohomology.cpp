#include "dncohom/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "dncohom/theta.hpp"

namespace dncohom {

std::int64_t poisson_dim(int D, int p, int d) {
  if (D < 1) throw std::invalid_argument("poisson_dim: D must be >= 1");
  if (p < 0 || d < 0) throw std::invalid_argument("poisson_dim: p and d must be >= 0");
  return h_theta_dim(D, p, d) + h_theta_dim(D, p + 1, d);
}

std::optional<std::int64_t> corollary_dim(int D, int p, int d) {
  if (D < 2) throw std::invalid_argument("corollary_dim: D must be >= 2");
  if (p < 0 || d < 0) return std::nullopt;
  if (p == 0 && d == 0) return 2;
  if (p == 0) return 0;
  if (p >= d + 2) return 0;
  if (p == d + 1) return binomial(D - 1, d);
  if (p == 1 && d == 1) return D - 1;
  // A vanishing entry at (p, d) = (2, 1) would contradict the p = d + 1 row
  // and the rank computation, so the zero belongs to (p, d) = (1, 2).
  if (p == 1 && d == 2) return 0;
  if (p == 2 && d == 2) return static_cast<std::int64_t>(D - 1) * (D - 2) / 2;
  return std::nullopt;
}

std::int64_t h2_closed_form_d2(int d) {
  if (d < 3) throw std::domain_error("h2_closed_form_d2: the case formula starts at d = 3");
  const int r = d % 6;
  const int q = d / 6;
  switch (r) {
    case 4: return q;          // d = 4 + 6k
    case 0: return q;          // d = 6 + 6k, k = q - 1
    case 2: return q;          // d = 8 + 6k, k = q - 1
    case 3: return q + 2;      // d = 3 + 6k
    case 5: return q + 2;      // d = 5 + 6k
    default: return q + 1;     // d = 7 + 6k, k = q - 1
  }
}

std::int64_t h_theta_closed_forms_d2(int p, int d) {
  if (d < 0) throw std::invalid_argument("h_theta_closed_forms_d2: d must be >= 0");
  if (p == 2) return d % 2 == 0 ? 0 : 1;
  if (p == 3) {
    if (d < 3) return 0;
    const int k = (d - 3) / 6;
    const int r = (d - 3) % 6;
    // r == 1 is d = 4 + 6k; r in {0, 2..5} covers d = 3 + 6k and 5+6k..8+6k.
    return r == 1 ? k : k + 1;
  }
  throw std::invalid_argument("h_theta_closed_forms_d2: p must be 2 or 3");
}

std::int64_t h_theta_partition_difference_d2(int p, int d) {
  if (p < 0 || d < 0) throw std::invalid_argument("h_theta_partition_difference_d2: negative argument");
  if (p == 0 && d == 1) return 0;
  const int shift = p * (3 - p) / 2;
  return partition_count(d + shift, p) - partition_count(d - 1 + shift, p);
}

std::vector<std::int64_t> h_generating_series_d2(int p, int d_max) {
  if (p == 0)
    throw std::domain_error(
        "h_generating_series_d2: the closed series evaluates to 1 + x at p = 0, but H^0_d(2) vanishes for d >= 1; "
        "use h_theta_dim instead");
  if (p < 0 || d_max < 0) throw std::invalid_argument("h_generating_series_d2: negative argument");
  std::vector<std::int64_t> c(static_cast<std::size_t>(d_max) + 1, 0);
  const int shift = p * (p - 1) / 2;
  if (shift > d_max) return c;
  c[shift] = 1;
  // Multiply by 1/(1 - x^i): c[n] += c[n - i] in ascending n.
  for (int i = 2; i <= p; ++i)
    for (int n = i; n <= d_max; ++n) c[n] += c[n - i];
  return c;
}

int VanishingRange::d_bound(int p) const {
  return static_cast<int>(static_cast<std::int64_t>(p) * (l + 1) - binomial(D + l, l));
}

bool VanishingRange::contains(int p, int d) const {
  return p > p_min_exclusive && p <= p_max && d >= 0 && d < d_bound(p);
}

std::vector<std::pair<int, int>> VanishingRange::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int p = p_min_exclusive + 1; p <= p_max; ++p)
    for (int d = 0; d < d_bound(p); ++d) out.emplace_back(p, d);
  return out;
}

VanishingRange vanishing_range(int D, int l) {
  if (D < 2 || l < 0) throw std::invalid_argument("vanishing_range: requires D >= 2 and l >= 0");
  VanishingRange r;
  r.D = D;
  r.l = l;
  r.p_min_exclusive = static_cast<int>(binomial(D + l - 1, l));
  r.p_max = static_cast<int>(binomial(D + l, l + 1));
  return r;
}

DimTable dim_table(int D, int p_max, int d_max) {
  if (D < 1) throw std::invalid_argument("dim_table: D must be >= 1");
  if (p_max < 0 || d_max < 0) throw std::invalid_argument("dim_table: empty window");
  DimTable t;
  t.D = D;
  for (int p = 0; p <= p_max; ++p) {
    for (int d = 0; d <= d_max; ++d) {
      t.record(p, d, poisson_dim(D, p, d), DimMethod::rank);
      if (D >= 2)
        if (auto c = corollary_dim(D, p, d)) t.record(p, d, *c, DimMethod::closed_form);
    }
  }
  return t;
}

BracketSpec::BracketSpec(std::vector<Rational> coefficients) : D(static_cast<int>(coefficients.size())), c(std::move(coefficients)) {
  if (D < 1) throw std::invalid_argument("BracketSpec: needs at least one coefficient");
  bool nonzero = false;
  for (const auto& x : c) nonzero = nonzero || x != 0;
  if (!nonzero) throw std::invalid_argument("BracketSpec: c must be nonzero");
}

bool BracketSpec::normalized() const {
  for (int i = 0; i < D; ++i)
    if (c[i] != (i == D - 1 ? 1 : 0)) return false;
  return true;
}

Rational NormalizationMatrix::determinant() const {
  auto a = J;
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

std::vector<Rational> NormalizationMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != J.size()) throw std::invalid_argument("NormalizationMatrix::apply: size mismatch");
  std::vector<Rational> out(J.size(), 0);
  for (std::size_t i = 0; i < J.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += J[i][k] * v[k];
  return out;
}

NormalizationMatrix normalize_bracket(const BracketSpec& spec) {
  const int D = spec.D;
  if (D < 1 || static_cast<int>(spec.c.size()) != D) throw std::invalid_argument("normalize_bracket: malformed spec");
  std::size_t j = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < spec.c.size(); ++i) {
    nonzero = nonzero || spec.c[i] != 0;
    if (abs(spec.c[i]) > abs(spec.c[j])) j = i;
  }
  if (!nonzero) throw std::invalid_argument("normalize_bracket: c must be nonzero");
  if (D == 1 && spec.c[0] != 1)
    throw std::invalid_argument("normalize_bracket: for D = 1 only c = 1 admits a unimodular normalization");

  const std::size_t last = static_cast<std::size_t>(D - 1);
  NormalizationMatrix n;
  n.J.assign(last + 1, std::vector<Rational>(last + 1, 0));
  for (std::size_t i = 0; i <= last; ++i) n.J[i][i] = 1;
  std::vector<Rational> v = spec.c;

  auto shear = [&](std::size_t target, std::size_t source, const Rational& t) {
    // row_target += t * row_source
    if (t == 0) return;
    for (std::size_t k = 0; k <= last; ++k) n.J[target][k] += t * n.J[source][k];
    v[target] += t * v[source];
  };

  const Rational pivot = spec.c[j];
  if (j != last) shear(last, j, (pivot - v[last]) / pivot);
  for (std::size_t k = 0; k < last; ++k) shear(k, last, -v[k] / v[last]);
  // Now v = pivot * xi_D; rescale the last row by 1/pivot and another row by
  // pivot to keep det J = 1.
  if (pivot != 1) {
    for (std::size_t k = 0; k <= last; ++k) {
      n.J[last][k] /= pivot;
      n.J[0][k] *= pivot;
    }
  }
  return n;
}

}  // namespace dncohom
