#pragma once

// Horizontal forms sum_I c_I dx^I over the first `a` independent variables,
// with coefficients in the super differential polynomials modulo constants.

#include <map>
#include <vector>

#include "dncohom/superpoly.hpp"

namespace dncohom {

class FormElement {
 public:
  /// Axis subsets are strictly increasing lists drawn from 1..a.
  using Components = std::map<std::vector<int>, SuperDiffPolynomial>;

  FormElement(int D, int a, Truncation t = {});

  int D() const noexcept { return D_; }
  int a() const noexcept { return a_; }
  const Truncation& truncation() const noexcept { return trunc_; }
  const Components& components() const noexcept { return comps_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  /// Adds c dx^{axes}; the axes may come in any order (the sign of sorting
  /// them is applied). Constant terms of c are dropped.
  void add(std::vector<int> axes, const SuperDiffPolynomial& c);

  FormElement& operator+=(const FormElement& o);
  FormElement& operator-=(const FormElement& o);
  FormElement operator+(const FormElement& o) const { return FormElement(*this) += o; }
  FormElement operator-(const FormElement& o) const { return FormElement(*this) -= o; }

  friend bool operator==(const FormElement& x, const FormElement& y) {
    return x.D_ == y.D_ && x.a_ == y.a_ && x.comps_ == y.comps_;
  }

  std::string to_string() const;

 private:
  int D_;
  int a_;
  Truncation trunc_;
  Components comps_;
};

/// d_H = sum_{i <= a} dx^i wedge d/dx^i.
FormElement d_H(const FormElement& omega);

/// Homotopy contraction h^{p,i} on forms of super degree p > 0 and form
/// degree i, 0 < i <= a. Satisfies h d_H + d_H h = id in form degrees i < a.
FormElement homotopy_h(const FormElement& omega, int p, int i);

}  // namespace dncohom
