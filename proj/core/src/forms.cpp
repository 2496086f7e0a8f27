#include "dncohom/forms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "dncohom/grading.hpp"
#include "dncohom/varcalc.hpp"

namespace dncohom {

FormElement::FormElement(int D, int a, Truncation t) : D_(D), a_(a), trunc_(t) {
  if (D < 1 || D > static_cast<int>(kMaxIndexDim)) throw std::invalid_argument("FormElement: D out of range");
  if (a < 1 || a > D) throw std::invalid_argument("FormElement: a must lie in 1..D");
}

void FormElement::add(std::vector<int> axes, const SuperDiffPolynomial& c) {
  if (c.D() != D_) throw std::invalid_argument("FormElement: dimension mismatch");
  int sign = 1;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] < 1 || axes[i] > a_) throw std::out_of_range("FormElement: axis outside 1..a");
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      if (axes[i] == axes[j]) return;
      if (axes[i] > axes[j]) sign = -sign;
    }
  }
  std::sort(axes.begin(), axes.end());
  auto it = comps_.try_emplace(std::move(axes), D_, trunc_).first;
  for (const auto& [m, x] : c.terms())
    if (m.weight() > 0) it->second.add_term(m, sign * x);
  if (it->second.is_zero()) comps_.erase(it);
}

FormElement& FormElement::operator+=(const FormElement& o) {
  if (o.D_ != D_ || o.a_ != a_) throw std::invalid_argument("FormElement: shape mismatch");
  for (const auto& [I, c] : o.comps_) add(I, c);
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
  if (o.D_ != D_ || o.a_ != a_) throw std::invalid_argument("FormElement: shape mismatch");
  for (const auto& [I, c] : o.comps_) add(I, -c);
  return *this;
}

std::string FormElement::to_string() const {
  if (comps_.empty()) return "0";
  std::string s;
  for (const auto& [I, c] : comps_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int i : I) s += " dx" + std::to_string(i);
  }
  return s;
}

FormElement d_H(const FormElement& omega) {
  FormElement out(omega.D(), omega.a(), omega.truncation());
  for (const auto& [I, c] : omega.components()) {
    for (int i = 1; i <= omega.a(); ++i) {
      if (std::find(I.begin(), I.end(), i) != I.end()) continue;
      std::vector<int> J{i};
      J.insert(J.end(), I.begin(), I.end());
      out.add(std::move(J), d_x(i, c));
    }
  }
  return out;
}

namespace {

// All f with 0 <= f <= R componentwise, over the first `a` entries.
void for_each_split(const MultiIndex& R, std::size_t a, std::size_t k, MultiIndex& f,
                    const std::function<void(const MultiIndex&)>& fn) {
  if (k == a) {
    fn(f);
    return;
  }
  for (int v = 0; v <= R[k]; ++v) {
    f.set(k, v);
    for_each_split(R, a, k + 1, f, fn);
  }
  f.set(k, 0);
}

}  // namespace

FormElement homotopy_h(const FormElement& omega, int p, int i) {
  if (p <= 0) throw std::invalid_argument("homotopy_h: requires super degree p > 0");
  const int a = omega.a();
  if (i < 1 || i > a) throw std::invalid_argument("homotopy_h: form degree must lie in 1..a");
  const int D = omega.D();
  const auto dim = static_cast<std::size_t>(D);
  const auto t = omega.truncation();
  FormElement out(D, a, t);
  for (const auto& [I, c] : omega.components()) {
    if (static_cast<int>(I.size()) != i) throw std::invalid_argument("homotopy_h: form degree mismatch");
    for (const auto& [m, x] : c.terms())
      if (m.super_degree() != p) throw std::invalid_argument("homotopy_h: super degree mismatch");
    for (std::size_t pos = 0; pos < I.size(); ++pos) {
      const int j = I[pos];
      const std::size_t j0 = static_cast<std::size_t>(j - 1);
      std::vector<int> rest = I;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      const Rational contraction_sign = pos % 2 == 0 ? 1 : -1;
      for (const auto& T : theta_variables(c)) {
        if (T[j0] == 0) continue;
        MultiIndex R(dim), Spp(dim);
        for (std::size_t k = 0; k < dim; ++k) (k < static_cast<std::size_t>(a) ? R : Spp).set(k, T[k]);
        R = R.lowered(j0);
        const auto q = partial_theta(T, c);
        const auto theta0 = SuperDiffPolynomial::theta(D, Spp, t);
        MultiIndex f(dim);
        for_each_split(R, static_cast<std::size_t>(a), 0, f, [&](const MultiIndex& fs) {
          const MultiIndex g = R - fs;
          Rational w(T[j0], a - i + 1 + fs.degree());
          w.canonicalize();
          for (std::size_t k = 0; k < static_cast<std::size_t>(a); ++k) w *= binomial(R[k], fs[k]);
          if (g.degree() % 2 == 1) w = -w;
          const auto term = d_multi(fs, theta0 * d_multi(g, q));
          out.add(rest, term * (w * contraction_sign / p));
        });
      }
    }
  }
  return out;
}

}  // namespace dncohom
