#include "quotient_cache.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "dncohom/varcalc.hpp"

namespace dncohom {

SparseRow<Rational> GradedComponent::coordinates(const SuperDiffPolynomial& f) const {
  SparseRow<Rational> row;
  row.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) row.emplace_back(index.at(m), c);
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

std::shared_ptr<const GradedComponent> graded_component(int D, int p, int d, int w) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const GradedComponent>> cache;
  const auto key = std::tuple{D, p, d, w};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto comp = std::make_shared<GradedComponent>();
  comp->basis = enumerate_monomials(D, p, d, w);
  for (std::size_t i = 0; i < comp->basis.size(); ++i) comp->index.emplace(comp->basis[i], i);
  if (d >= 1) {
    for (const auto& m : enumerate_monomials(D, p, d - 1, w)) {
      const auto f = SuperDiffPolynomial::from_monomial(D, m, 1, kWideTruncation);
      for (int axis = 1; axis <= D; ++axis) comp->echelon.insert(comp->coordinates(d_x(axis, f)));
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(comp)).first->second;
}

}  // namespace dncohom
