// Copyright 2026 the mubasis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MUBASIS_MOVING_FORM_HPP
#define MUBASIS_MOVING_FORM_HPP

#include <array>
#include <vector>

#include "mubasis/hform.hpp"
#include "mubasis/mpoly.hpp"

namespace mubasis {

// Linear form in x,y,z(,w) whose coefficients are homogeneous binary
// forms of one common degree: a moving line (arity 3) or moving plane
// (arity 4). At least one coefficient is nonzero.
class MovingForm {
 public:
  MovingForm(int arity, std::array<HForm, 4> coeffs)
      : arity_(arity), coeffs_(std::move(coeffs)) {
    if (arity != 3 && arity != 4)
      throw internal_error("moving form arity must be 3 or 4");
    degree_ = -1;
    for (int v = 0; v < arity_; ++v) {
      if (coeffs_[v].is_zero()) continue;
      if (degree_ < 0)
        degree_ = coeffs_[v].degree();
      else if (coeffs_[v].degree() != degree_)
        throw internal_error("moving form coefficients of unequal degree");
    }
    if (degree_ < 0)
      throw internal_error("moving form with all coefficients zero");
    for (int v = arity_; v < 4; ++v)
      if (!coeffs_[v].is_zero())
        throw internal_error("moving line with a fourth coefficient");
  }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const HForm& coeff(int v) const { return coeffs_.at(v); }
  const std::array<HForm, 4>& coeffs() const { return coeffs_; }

  // Linear polynomial collecting the s^j sbar^(degree-j) coefficient of
  // every variable: the Sylvester matrix entry for that power.
  MPoly linear_coeff(int s_exp) const {
    MPoly r;
    for (int v = 0; v < arity_; ++v) {
      if (coeffs_[v].is_zero()) continue;
      Mono m{0, 0, 0, 0};
      m[v] = 1;
      r.add_term(m, coeffs_[v].coeff(s_exp));
    }
    return r;
  }

  // The whole form as a linear polynomial; degree 0 only.
  MPoly linear_form() const {
    if (degree_ != 0)
      throw internal_error("linear form conversion of a nonconstant form");
    return linear_coeff(0);
  }

  // sum_v coeff_v * f_v, for deciding syzygy membership.
  HForm pair_with(const std::array<HForm, 4>& f, int n) const {
    HForm acc = HForm::zero();
    for (int v = 0; v < n; ++v) acc = acc + coeffs_[v] * f[v];
    return acc;
  }

  friend bool operator==(const MovingForm& a, const MovingForm& b) {
    return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int arity_;
  int degree_;
  std::array<HForm, 4> coeffs_;
};

// Homogeneous resultant of two moving forms of formal degrees (mu1, mu2),
// as the determinant of the (mu1+mu2) x (mu1+mu2) Sylvester matrix whose
// entries are the linear coefficient polynomials; rows of p come first,
// coefficients in descending s-power. A degree-0 p gives p^mu2.
inline MPoly sylvester_resultant(const MovingForm& p, const MovingForm& q) {
  if (p.arity() != q.arity())
    throw internal_error("resultant of forms with different arity");
  int mu1 = p.degree();
  int mu2 = q.degree();
  int n = mu1 + mu2;
  if (n < 1)
    throw internal_error("resultant needs total degree at least one");
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
  for (int r = 0; r < mu2; ++r)
    for (int j = 0; j <= mu1; ++j) m[r][r + j] = p.linear_coeff(mu1 - j);
  for (int r = 0; r < mu1; ++r)
    for (int j = 0; j <= mu2; ++j)
      m[mu2 + r][r + j] = q.linear_coeff(mu2 - j);
  return bareiss_det(std::move(m));
}

}  // namespace mubasis

#endif  // MUBASIS_MOVING_FORM_HPP
