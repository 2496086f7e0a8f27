#pragma once

// Multi-index enumeration, partition counting and the closed-form dimension
// counts of the exterior algebra Theta.

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "dncohom/multi_index.hpp"

namespace dncohom {

/// How a DimTable entry was obtained.
enum class DimMethod { rank, closed_form, oracle, pva };

std::string_view to_string(DimMethod m);

struct DimEntry {
  std::int64_t dim = 0;
  DimMethod method = DimMethod::rank;
};

/// Dimensions indexed by (p, d) for a fixed number D of independent variables.
struct DimTable {
  int D = 1;
  std::map<std::pair<int, int>, DimEntry> entries;

  /// Inserts or cross-checks an entry. Throws std::logic_error when a second
  /// method disagrees with a value already present for the same (p, d).
  void record(int p, int d, std::int64_t dim, DimMethod method);
};

/// All S in Z^k_{>=0} with |S| = d, ascending in graded-lex order.
std::vector<MultiIndex> multi_indices_of_degree(int k, int d);

/// Number of multi-indices of degree d in Z^k_{>=0}: C(d+k-1, k-1), and for
/// k = 0 just [d == 0].
std::int64_t count_multi_indices(int k, int d);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// P(n, k): partitions of n into exactly k positive parts. Zero for n < 0.
std::int64_t partition_count(int n, int k);

/// dim Theta^p_d from the product-of-binomials formula. Theta has one odd
/// generator theta^S for every S in Z^{D-1}_{>=0}.
std::int64_t theta_dim(int D, int p, int d);

/// dim Theta^p_d for D = 2 via P(d + p - C(p,2), p).
std::int64_t theta_dim_d2(int p, int d);

/// Coefficients of prod_{s>=0} (1 + x y^s)^{C(s+D-2, D-2)}, truncated to
/// x^p y^d with p <= p_max, d <= d_max. Result is indexed [p][d].
std::vector<std::vector<std::int64_t>> theta_generating_series(int D, int p_max, int d_max);

}  // namespace dncohom
