#pragma once

#include <map>
#include <memory>
#include <vector>

#include "dncohom/sparse_matrix.hpp"
#include "dncohom/superpoly.hpp"

namespace dncohom {

/// Monomial basis of one (p, d, w) component together with the echelon form
/// of the total derivatives landing in it.
struct GradedComponent {
  std::vector<SuperMonomial> basis;
  std::map<SuperMonomial, std::size_t> index;
  RowEchelon echelon;

  /// Coordinates of a polynomial whose terms all lie in this component.
  SparseRow<Rational> coordinates(const SuperDiffPolynomial& f) const;
};

/// Shared, memoized per (D, p, d, w).
std::shared_ptr<const GradedComponent> graded_component(int D, int p, int d, int w);

/// Truncation wide enough for every internal computation on components.
inline constexpr Truncation kWideTruncation{1 << 16, 1 << 16};

}  // namespace dncohom
