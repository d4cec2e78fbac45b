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

#ifndef MUBASIS_HFORM_HPP
#define MUBASIS_HFORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "mubasis/errors.hpp"
#include "mubasis/rational.hpp"
#include "mubasis/upoly.hpp"

namespace mubasis {

// Homogeneous binary form in (s, sbar) over Rat. A nonzero form of
// degree d stores d+1 coefficients, entry i multiplying s^i sbar^(d-i).
// The zero form is a distinct marker carrying no degree; it is never
// conflated with the degree-0 form of value 0.
class HForm {
 public:
  HForm() : degree_(-1) {}

  HForm(int degree, std::vector<Rat> coeffs) {
    if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1)
      throw internal_error("homogeneous form: coefficient count mismatch");
    bool all_zero = true;
    for (const auto& c : coeffs)
      if (c != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      degree_ = -1;
    } else {
      degree_ = degree;
      coeffs_ = std::move(coeffs);
    }
  }

  static HForm zero() { return HForm(); }

  static HForm constant(const Rat& c) { return HForm(0, {c}); }

  static HForm one() { return constant(Rat(1)); }

  // c * s^s_exp * sbar^(degree - s_exp)
  static HForm monomial(int degree, int s_exp, const Rat& c) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v.at(s_exp) = c;
    return HForm(degree, std::move(v));
  }

  // Homogenization of a univariate polynomial in s to the given degree.
  static HForm from_affine(const UPoly& u, int degree) {
    if (upoly_is_zero(u)) return zero();
    if (upoly_deg(u) > degree)
      throw internal_error("homogenization degree below affine degree");
    std::vector<Rat> v(degree + 1, Rat(0));
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i];
    return HForm(degree, std::move(v));
  }

  bool is_zero() const { return degree_ < 0; }
  // -1 for the zero form.
  int degree() const { return degree_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  const Rat& coeff(int s_exp) const { return coeffs_.at(s_exp); }

  bool is_constant() const { return degree_ == 0; }

  // Dehomogenization at sbar = 1, trimmed.
  UPoly affine() const {
    UPoly u = coeffs_;
    upoly_trim(u);
    return u;
  }

  // Exponent of the largest sbar power dividing the form.
  int sbar_valuation() const {
    if (is_zero()) throw internal_error("sbar valuation of the zero form");
    return degree_ - upoly_deg(affine());
  }

  int s_valuation() const {
    if (is_zero()) throw internal_error("s valuation of the zero form");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return degree_;
  }

  // Multiplies by sbar^e; same coefficients at the same s-exponents.
  HForm shifted_sbar(int e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Rat> v(degree_ + e + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    return HForm(degree_ + e, std::move(v));
  }

  Rat eval(const Rat& s, const Rat& sbar) const {
    if (is_zero()) return Rat(0);
    Rat acc(0), spow(1);
    std::vector<Rat> sbpow(degree_ + 1);
    sbpow[0] = 1;
    for (int i = 1; i <= degree_; ++i) sbpow[i] = sbpow[i - 1] * sbar;
    for (int i = 0; i <= degree_; ++i) {
      acc += coeffs_[i] * spow * sbpow[degree_ - i];
      spow *= s;
    }
    return acc;
  }

  friend bool operator==(const HForm& a, const HForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  friend HForm operator+(const HForm& a, const HForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_)
      throw internal_error("adding forms of different degrees");
    std::vector<Rat> v = a.coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
    return HForm(a.degree_, std::move(v));
  }

  friend HForm operator-(const HForm& a) {
    if (a.is_zero()) return a;
    std::vector<Rat> v = a.coeffs_;
    for (auto& c : v) c = -c;
    return HForm(a.degree_, std::move(v));
  }

  friend HForm operator-(const HForm& a, const HForm& b) { return a + (-b); }

  friend HForm operator*(const HForm& a, const HForm& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Rat> v(a.degree_ + b.degree_ + 1, Rat(0));
    for (int i = 0; i <= a.degree_; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j <= b.degree_; ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return HForm(a.degree_ + b.degree_, std::move(v));
  }

  friend HForm operator*(const Rat& c, const HForm& a) {
    if (c == 0 || a.is_zero()) return zero();
    std::vector<Rat> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return HForm(a.degree_, std::move(v));
  }

 private:
  int degree_;
  std::vector<Rat> coeffs_;
};

// Monic gcd (leading coefficient 1 in the s-major order). gcd with the
// zero form returns the monic other argument; homogeneity makes the
// shared sbar power explicit.
inline HForm hform_gcd(const HForm& a, const HForm& b) {
  if (a.is_zero() && b.is_zero())
    throw input_error("gcd of two zero forms");
  auto monic = [](const HForm& f) {
    UPoly u = f.affine();
    Rat lead = u.back();
    return (1 / lead) * f;
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  int e = std::min(a.sbar_valuation(), b.sbar_valuation());
  UPoly g = upoly_gcd_monic(a.affine(), b.affine());
  return HForm::from_affine(g, upoly_deg(g)).shifted_sbar(e);
}

// Exact quotient a / b with deg q = deg a - deg b.
inline HForm hform_div_exact(const HForm& a, const HForm& b) {
  if (b.is_zero()) throw internal_error("form division by the zero form");
  if (a.is_zero()) return HForm::zero();
  if (a.degree() < b.degree() || a.sbar_valuation() < b.sbar_valuation())
    throw internal_error("form division not exact: sbar power deficit");
  auto [q, r] = upoly_divmod(a.affine(), b.affine());
  if (!upoly_is_zero(r)) {
    std::string rem;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      if (!rem.empty()) rem += " + ";
      rem += rat_to_string(r[i]) + "*s^" + std::to_string(i);
    }
    throw internal_error("form division not exact, remainder " + rem);
  }
  return HForm::from_affine(q, a.degree() - b.degree());
}

}  // namespace mubasis

#endif  // MUBASIS_HFORM_HPP
