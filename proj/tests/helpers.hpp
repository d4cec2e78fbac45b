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

// Test-only utilities: small builders, random instances, and the
// independent oracles the checks compare against. Everything here stays
// independent of the implementation paths it cross-checks.

#ifndef MUBASIS_TESTS_HELPERS_HPP
#define MUBASIS_TESTS_HELPERS_HPP

#include <initializer_list>
#include <tuple>
#include <vector>

#include "mubasis/mubasis.hpp"

namespace mubasis::testing {

inline MPoly mp(std::initializer_list<std::tuple<int, int, int, int, long>> ts) {
  MPoly p;
  for (const auto& [a, b, c, d, k] : ts) p.add_term({a, b, c, d}, Rat(k));
  return p;
}

// Bivariate (s, t) builder for raw surface inputs.
inline MPoly st(std::initializer_list<std::tuple<int, int, long>> ts) {
  MPoly p;
  for (const auto& [es, et, c] : ts) p.add_term({es, et, 0, 0}, Rat(c));
  return p;
}

inline HForm hf(int degree, std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return HForm(degree, std::move(v));
}

// Independent determinant oracle: textbook cofactor expansion along the
// first row, no elimination at all.
inline MPoly cofactor_det(const std::vector<std::vector<MPoly>>& m) {
  std::size_t n = m.size();
  if (n == 0) return MPoly::constant(1);
  if (n == 1) return m[0][0];
  MPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(m[i][jj]);
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][j] * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// a == c * b for a single nonzero rational c.
inline bool scalar_multiple(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rat c = a.leading().second / b.leading().second;
  return a == c * b;
}

inline UPoly random_upoly(SeededRng& rng, int deg, bool monic_lead = false) {
  UPoly u(deg + 1);
  for (int i = 0; i <= deg; ++i) u[i] = Rat(rng.uniform(-5, 5));
  if (monic_lead || u[deg] == 0) u[deg] = Rat(rng.nonzero(5));
  upoly_trim(u);
  return u;
}

inline HForm random_hform(SeededRng& rng, int deg, bool tight = true) {
  return HForm::from_affine(random_upoly(rng, deg, tight), deg);
}

// Valid curve parametrization of total degree <= max_n, occasionally
// carrying a forced common factor so the base-point path is exercised.
inline CurveParam random_curve(SeededRng& rng, int max_n) {
  for (;;) {
    int gdeg = rng.uniform(0, 2) == 0 ? rng.uniform(1, 2) : 0;
    int n = rng.uniform(1, std::max(1, max_n - gdeg));
    std::array<HForm, 3> f;
    for (auto& fi : f) {
      fi = rng.uniform(0, 9) == 0 ? HForm::zero()
                                  : HForm::from_affine(random_upoly(rng, n), n);
    }
    bool any = false;
    for (const auto& fi : f) any = any || !fi.is_zero();
    if (!any) continue;
    if (gdeg > 0) {
      HForm g = random_hform(rng, gdeg);
      for (auto& fi : f)
        if (!fi.is_zero()) fi = g * fi;
      n += gdeg;
    }
    try {
      return CurveParam(f, n);
    } catch (const input_error&) {
      continue;  // proportional draw, take another
    }
  }
}

// Raw non-degenerate ruled surface input with slice degrees <= the
// bounds; surfaces needing every normalization branch come out of this.
inline SurfaceInput random_surface(SeededRng& rng, int max_n0, int max_n1) {
  for (;;) {
    SurfaceInput raw;
    int d0 = rng.uniform(0, max_n0);
    int d1 = rng.uniform(0, max_n1);
    for (int i = 0; i < 4; ++i) {
      MPoly fi;
      if (rng.uniform(0, 5) != 0) {
        UPoly a = random_upoly(rng, rng.uniform(0, d0));
        for (int j = 0; j < static_cast<int>(a.size()); ++j)
          fi.add_term({j, 0, 0, 0}, a[j]);
      }
      if (rng.uniform(0, 5) != 0) {
        UPoly b = random_upoly(rng, rng.uniform(0, d1));
        for (int j = 0; j < static_cast<int>(b.size()); ++j)
          fi.add_term({j, 1, 0, 0}, b[j]);
      }
      raw[i] = fi;
    }
    try {
      normalize(raw, 1);
      return raw;
    } catch (const input_error&) {
      continue;  // degenerate draw
    }
  }
}

// Brute-force implicitization oracle: the coefficients of an unknown
// homogeneous polynomial of degree D in x, y, z vanishing on the
// parametrization solve an exact linear system; the kernel must be one
// line. Completely independent of resultants.
inline MPoly implicitize_by_linear_algebra(const CurveParam& c, int D) {
  std::vector<Mono> monos;
  for (int a = D; a >= 0; --a)
    for (int b = D - a; b >= 0; --b) monos.push_back({a, b, D - a - b, 0});
  int cols = static_cast<int>(monos.size());
  int rows = c.degree * D + 1;
  RatMat m(rows, RatVec(cols, Rat(0)));
  for (int j = 0; j < cols; ++j) {
    HForm prod = HForm::constant(Rat(1));
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < monos[j][v]; ++e) {
        if (c.f[v].is_zero()) {
          prod = HForm::zero();
          break;
        }
        prod = prod * c.f[v];
      }
    if (prod.is_zero()) continue;
    for (int i = 0; i <= prod.degree(); ++i) m[i][j] = prod.coeff(i);
  }
  auto kern = kernel_basis(std::move(m), cols);
  if (kern.size() != 1)
    throw internal_error("implicitization oracle: kernel dimension " +
                         std::to_string(kern.size()));
  MPoly F;
  for (int j = 0; j < cols; ++j) F.add_term(monos[j], kern[0][j]);
  return F.content_primitive().second;
}

}  // namespace mubasis::testing

#endif  // MUBASIS_TESTS_HELPERS_HPP
