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

#ifndef MUBASIS_CURVE_HPP
#define MUBASIS_CURVE_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mubasis/kth_root.hpp"
#include "mubasis/linalg.hpp"
#include "mubasis/moving_form.hpp"

namespace mubasis {

namespace detail {

// gcd over the nonzero entries of a form triple/quadruple.
template <std::size_t N>
HForm gcd_of(const std::array<HForm, N>& f, int count = static_cast<int>(N)) {
  HForm g = HForm::zero();
  for (int i = 0; i < count; ++i) {
    if (f[i].is_zero()) continue;
    g = g.is_zero() ? hform_gcd(f[i], f[i]) : hform_gcd(g, f[i]);
  }
  if (g.is_zero()) throw input_error("all coordinate forms are zero");
  return g;
}

// Basis of the degree-d syzygies of a triple with gcd 1, one moving line
// per kernel vector of the coefficient-matching linear map. Unknowns are
// laid out variable-major, s-exponent ascending inside each block, and
// each basis vector is scaled to primitive integers with positive lead.
inline std::vector<MovingForm> syzygy_kernel_reduced(
    const std::array<HForm, 3>& f, int n, int d) {
  int cols = 3 * (d + 1);
  int rows = d + n + 1;
  RatMat m(rows, RatVec(cols, Rat(0)));
  for (int v = 0; v < 3; ++v) {
    if (f[v].is_zero()) continue;
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i <= n; ++i)
        m[i + j][v * (d + 1) + j] = f[v].coeff(i);
  }
  std::vector<MovingForm> basis;
  for (auto& vec : kernel_basis(std::move(m), cols)) {
    make_primitive(vec);
    std::array<HForm, 4> c;
    for (int v = 0; v < 3; ++v) {
      std::vector<Rat> cv(vec.begin() + v * (d + 1),
                          vec.begin() + (v + 1) * (d + 1));
      c[v] = HForm(d, std::move(cv));
    }
    basis.emplace_back(3, std::move(c));
  }
  return basis;
}

inline RatVec flatten(const MovingForm& mf, int d) {
  RatVec v(3 * (d + 1), Rat(0));
  for (int i = 0; i < 3; ++i) {
    if (mf.coeff(i).is_zero()) continue;
    for (int j = 0; j <= d; ++j) v[i * (d + 1) + j] = mf.coeff(i).coeff(j);
  }
  return v;
}

struct SyzygyPair {
  MovingForm p, q;  // degrees mu1 <= mu2
  HForm gcd;        // common factor divided out of the input triple
  int reduced_degree = 0;
};

// Minimal-degree echelon basis of the syzygy module of any triple of
// equal-degree forms, not all zero. Handles the rank-degenerate case
// (all three proportional) where both generators have the same degree.
inline SyzygyPair syzygy_pair_basis(const std::array<HForm, 3>& f) {
  HForm g = gcd_of(f);
  std::array<HForm, 3> reduced;
  for (int i = 0; i < 3; ++i)
    reduced[i] = f[i].is_zero() ? HForm::zero() : hform_div_exact(f[i], g);
  int n = 0;
  for (const auto& r : reduced)
    if (!r.is_zero()) n = r.degree();

  std::optional<MovingForm> p;
  int mu1 = 0;
  for (int d = 0; d <= n; ++d) {
    auto kern = syzygy_kernel_reduced(reduced, n, d);
    if (!kern.empty()) {
      mu1 = d;
      p = kern.front();
      break;
    }
  }
  if (!p) throw internal_error("syzygy module without low-degree generator");

  int mu2 = n - mu1;
  auto kern = syzygy_kernel_reduced(reduced, n, mu2);
  SpanTracker multiples;
  for (int j = 0; j <= mu2 - mu1; ++j) {
    HForm sh = HForm::monomial(mu2 - mu1, j, Rat(1));
    std::array<HForm, 4> c;
    for (int v = 0; v < 3; ++v)
      c[v] = p->coeff(v).is_zero() ? HForm::zero() : sh * p->coeff(v);
    multiples.add(flatten(MovingForm(3, std::move(c)), mu2));
  }
  for (auto& cand : kern) {
    if (multiples.add(flatten(cand, mu2)))
      return {*p, std::move(cand), g, n};
  }
  throw internal_error("second syzygy generator not found at expected degree");
}

}  // namespace detail

// Parametrization of a rational planar curve: three forms of one common
// degree n >= 1 whose gcd has degree strictly below n.
struct CurveParam {
  std::array<HForm, 3> f;
  int degree;

  CurveParam(std::array<HForm, 3> forms, int n) : f(std::move(forms)),
                                                  degree(n) {
    if (n < 1) throw input_error("curve parametrization must have degree >= 1");
    bool any = false;
    for (const auto& fi : f) {
      if (fi.is_zero()) continue;
      any = true;
      if (fi.degree() != n)
        throw input_error("curve coordinate forms of unequal degree");
    }
    if (!any) throw input_error("all curve coordinates are zero");
    HForm g = detail::gcd_of(f);
    if (g.degree() >= n)
      throw input_error(
          "degenerate curve: coordinates are proportional (image is a point)");
  }

  static CurveParam from_affine(const std::array<UPoly, 3>& u) {
    int n = 0;
    for (const auto& ui : u) n = std::max(n, upoly_deg(ui));
    if (n < 1) throw input_error("curve parametrization must have degree >= 1");
    std::array<HForm, 3> f;
    for (int i = 0; i < 3; ++i) f[i] = HForm::from_affine(u[i], n);
    return CurveParam(std::move(f), n);
  }
};

struct MuBasisCurve {
  MovingForm p, q;
  // mu1 == 0: the curve lies on a line; supported and flagged.
  bool line;

  int mu1() const { return p.degree(); }
  int mu2() const { return q.degree(); }
};

// Basis of the vector space of degree-d syzygies of the gcd-reduced
// triple; the syzygy module itself is unchanged by the reduction.
inline std::vector<MovingForm> syzygy_kernel_at_degree(const CurveParam& c,
                                                       int d) {
  HForm g = detail::gcd_of(c.f);
  std::array<HForm, 3> reduced;
  for (int i = 0; i < 3; ++i)
    reduced[i] =
        c.f[i].is_zero() ? HForm::zero() : hform_div_exact(c.f[i], g);
  return detail::syzygy_kernel_reduced(reduced, c.degree - g.degree(), d);
}

// Minimal-degree basis (p, q) of the syzygy module, mu1 + mu2 = n - deg g,
// generators chosen in reduced row-echelon order for determinism.
inline MuBasisCurve mu_basis_curve(const CurveParam& c) {
  auto pair = detail::syzygy_pair_basis(c.f);
  return {pair.p, pair.q, pair.p.degree() == 0};
}

struct CurveImplicit {
  MPoly F;       // primitive, first coefficient positive
  int k;         // resultant exponent: Res(p, q) == content * F^k
  int degree;    // total degree of F
  Rat content;
  bool line;
};

// Implicit equation from the resultant of the mu-basis. A line (mu1 = 0)
// is returned directly as F = p with k = mu2, matching the degree-0
// resultant convention Res(p, q) = p^mu2.
inline CurveImplicit curve_implicitize(const CurveParam& c, SeededRng& rng) {
  MuBasisCurve basis = mu_basis_curve(c);
  CurveImplicit out;
  out.line = basis.line;
  if (basis.line) {
    auto [cont, prim] = basis.p.linear_form().content_primitive();
    out.F = prim;
    out.k = basis.mu2();
    out.degree = 1;
    out.content = Rat(1);
    for (int i = 0; i < out.k; ++i) out.content *= cont;
  } else {
    MPoly res = sylvester_resultant(basis.p, basis.q);
    if (res.is_zero())
      throw internal_error("vanishing mu-basis resultant");
    out.k = power_exponent_probe(res, rng);
    auto root = mpoly_kth_root(res, out.k, &out.content);
    if (!root)
      throw internal_error("confirmed power exponent failed root extraction");
    out.F = std::move(*root);
    out.degree = out.F.total_degree();
  }
  if (out.degree * out.k != basis.mu1() + basis.mu2())
    throw internal_error("implicit degree does not match the mu-degree sum");
  return out;
}

inline CurveImplicit curve_implicitize(const CurveParam& c, long long seed) {
  SeededRng rng(seed);
  return curve_implicitize(c, rng);
}

}  // namespace mubasis

#endif  // MUBASIS_CURVE_HPP
