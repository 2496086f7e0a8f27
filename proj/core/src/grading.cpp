#include "dncohom/grading.hpp"

#include <stdexcept>
#include <string>

namespace dncohom {

std::string_view to_string(DimMethod m) {
  switch (m) {
    case DimMethod::rank: return "rank";
    case DimMethod::closed_form: return "closed-form";
    case DimMethod::oracle: return "oracle";
    case DimMethod::pva: return "pva";
  }
  return "unknown";
}

void DimTable::record(int p, int d, std::int64_t dim, DimMethod method) {
  if (dim < 0) throw std::invalid_argument("DimTable: negative dimension");
  auto [it, inserted] = entries.try_emplace({p, d}, DimEntry{dim, method});
  if (!inserted && it->second.dim != dim) {
    throw std::logic_error("DimTable cross-check failed at (p=" + std::to_string(p) + ", d=" + std::to_string(d) +
                           "): " + std::string(to_string(it->second.method)) + " gives " +
                           std::to_string(it->second.dim) + ", " + std::string(to_string(method)) + " gives " +
                           std::to_string(dim));
  }
}

namespace {

void compositions(int k, int axis, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (axis == k - 1) {
    cur.set(axis, remaining);
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.set(axis, v);
    compositions(k, axis + 1, remaining - v, cur, out);
  }
  cur.set(axis, 0);
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int k, int d) {
  if (k < 0 || d < 0) throw std::invalid_argument("multi_indices_of_degree: negative argument");
  std::vector<MultiIndex> out;
  if (k == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(static_cast<std::size_t>(k));
  compositions(k, 0, d, cur, out);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t count_multi_indices(int k, int d) {
  if (d < 0 || k < 0) return 0;
  if (k == 0) return d == 0 ? 1 : 0;
  return binomial(d + k - 1, k - 1);
}

std::int64_t partition_count(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < k) return 0;
  // table[m][j] = P(m, j); recurrence P(m, j) = P(m-1, j-1) + P(m-j, j).
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n) + 1,
                                               std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 0));
  table[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= k && j <= m; ++j) table[m][j] = table[m - 1][j - 1] + table[m - j][j];
  return table[n][k];
}

namespace {

// Distributes p generators over the generator degrees s = s_min.. with the
// degree budget d; counts choose(N(s), p_s) per level.
std::int64_t theta_dim_rec(int gen_dim, int s, int p, int d) {
  if (p == 0) return d == 0 ? 1 : 0;
  // Every remaining generator has degree >= s.
  if (static_cast<std::int64_t>(p) * s > d) return 0;
  std::int64_t total = 0;
  const std::int64_t n_s = count_multi_indices(gen_dim, s);
  for (int ps = 0; ps <= p && static_cast<std::int64_t>(ps) * s <= d; ++ps) {
    const std::int64_t ways = binomial(n_s, ps);
    if (ways == 0) break;
    total += ways * theta_dim_rec(gen_dim, s + 1, p - ps, d - ps * s);
  }
  return total;
}

}  // namespace

std::int64_t theta_dim(int D, int p, int d) {
  if (D < 1) throw std::invalid_argument("theta_dim: D must be >= 1");
  if (p < 0 || d < 0) return 0;
  if (D == 1) return (d == 0 && p <= 1) ? 1 : 0;
  return theta_dim_rec(D - 1, 0, p, d);
}

std::int64_t theta_dim_d2(int p, int d) {
  if (p < 0 || d < 0) return 0;
  return partition_count(d + p - p * (p - 1) / 2, p);
}

std::vector<std::vector<std::int64_t>> theta_generating_series(int D, int p_max, int d_max) {
  if (D < 2) throw std::invalid_argument("theta_generating_series: D must be >= 2");
  if (p_max < 0 || d_max < 0) throw std::invalid_argument("theta_generating_series: negative window");
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(p_max) + 1,
                                           std::vector<std::int64_t>(static_cast<std::size_t>(d_max) + 1, 0));
  c[0][0] = 1;
  for (int s = 0; s <= d_max; ++s) {
    const std::int64_t mult = binomial(s + D - 2, D - 2);
    // Multiply by (1 + x y^s) mult times; iterate p downwards so each factor
    // is applied once.
    for (std::int64_t rep = 0; rep < mult; ++rep)
      for (int p = p_max; p >= 1; --p)
        for (int d = d_max; d >= s; --d) c[p][d] += c[p - 1][d - s];
  }
  return c;
}

}  // namespace dncohom
