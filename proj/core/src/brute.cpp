#include <string>

#include "dncohom/varcalc.hpp"
#include "quotient_cache.hpp"

namespace dncohom {

namespace {

std::vector<SparseRow<Rational>> delta_rows(int D, const GradedComponent& from, const GradedComponent& to) {
  std::vector<SparseRow<Rational>> rows;
  rows.reserve(from.basis.size());
  for (const auto& m : from.basis)
    rows.push_back(to.coordinates(delta_op(SuperDiffPolynomial::from_monomial(D, m, 1, kWideTruncation))));
  return rows;
}

std::shared_ptr<const GradedComponent> component_or_empty(int D, int p, int d, int w) {
  static const auto empty = std::make_shared<const GradedComponent>();
  if (p < 0 || d < 0) return empty;
  return graded_component(D, p, d, w);
}

// Rank of the map induced by Delta from C_from / I_from into C_to / I_to.
std::size_t induced_rank(int D, const GradedComponent& from, const GradedComponent& to) {
  RowEchelon e = to.echelon;
  std::size_t r = 0;
  for (auto& row : delta_rows(D, from, to)) r += e.insert(std::move(row)) ? 1 : 0;
  return r;
}

std::int64_t quotient_cohomology_at_weight(int D, int p, int d, int w) {
  const auto prev = component_or_empty(D, p - 1, d - 1, w);
  const auto here = component_or_empty(D, p, d, w);
  const auto next = component_or_empty(D, p + 1, d + 1, w);
  const auto dim = static_cast<std::int64_t>(here->basis.size() - here->echelon.rank());
  return dim - static_cast<std::int64_t>(induced_rank(D, *here, *next)) -
         static_cast<std::int64_t>(induced_rank(D, *prev, *here));
}

std::int64_t delta_cohomology_at_weight(int D, int p, int d, int w) {
  const auto prev = component_or_empty(D, p - 1, d - 1, w);
  const auto here = component_or_empty(D, p, d, w);
  const auto next = component_or_empty(D, p + 1, d + 1, w);
  return static_cast<std::int64_t>(here->basis.size()) - static_cast<std::int64_t>(exact_rank(delta_rows(D, *here, *next))) -
         static_cast<std::int64_t>(exact_rank(delta_rows(D, *prev, *here)));
}

template <typename F>
std::int64_t sum_over_weights(int D, int p, int d, int u_max, F&& at_weight, const char* what) {
  if (D < 1 || D > static_cast<int>(kMaxIndexDim)) throw std::invalid_argument(std::string(what) + ": D out of range");
  if (p < 0 || d < 0 || u_max < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
  std::int64_t total = 0;
  for (int w = p; w <= p + u_max; ++w) total += at_weight(D, p, d, w);
  if (const auto extra = at_weight(D, p, d, p + u_max + 1); extra != 0)
    throw TruncationUnstable(std::string(what) + ": truncation unstable at (p, d) = (" + std::to_string(p) + ", " +
                             std::to_string(d) + "), u_max = " + std::to_string(u_max));
  return total;
}

}  // namespace

std::int64_t brute_cohomology(int D, int p, int d, int u_max) {
  return sum_over_weights(D, p, d, u_max, quotient_cohomology_at_weight, "brute_cohomology");
}

std::int64_t delta_cohomology_dim(int D, int p, int d, int u_max) {
  return sum_over_weights(D, p, d, u_max, delta_cohomology_at_weight, "delta_cohomology_dim");
}

}  // namespace dncohom
