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

#ifndef MUBASIS_FORMAT_HPP
#define MUBASIS_FORMAT_HPP

#include <array>
#include <string>
#include <vector>

#include "mubasis/hform.hpp"
#include "mubasis/moving_form.hpp"
#include "mubasis/mpoly.hpp"

namespace mubasis {

inline const std::array<std::string, 4> kVarsXYZW = {"x", "y", "z", "w"};
inline const std::array<std::string, 4> kVarsST = {"s", "t", "", ""};

namespace detail {

// One monomial as "coeff*x^2*y" with unit coefficients suppressed; the
// sign is emitted by the caller.
inline std::string format_term(const Rat& coeff, const Mono& m,
                               const std::array<std::string, 4>& vars,
                               int nvars) {
  std::string factors;
  for (int v = 0; v < nvars; ++v) {
    if (m[v] == 0) continue;
    if (!factors.empty()) factors += "*";
    factors += vars[v];
    if (m[v] > 1) factors += "^" + std::to_string(m[v]);
  }
  Rat a = abs(coeff);
  if (factors.empty()) return rat_to_string(a);
  if (a == 1) return factors;
  return rat_to_string(a) + "*" + factors;
}

inline void append_signed(std::string& out, bool negative,
                          const std::string& term) {
  if (out.empty()) {
    if (negative) out += "-";
    out += term;
  } else {
    out += negative ? " - " : " + ";
    out += term;
  }
}

}  // namespace detail

// Deterministic graded-lex rendering; affine_w treats the last variable
// as 1 (dehomogenization of a homogeneous polynomial).
inline std::string format_mpoly(const MPoly& p,
                                const std::array<std::string, 4>& vars,
                                bool affine_w = false) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    if (affine_w) mm[3] = 0;
    detail::append_signed(out, c < 0, detail::format_term(c, mm, vars, 4));
  }
  return out;
}

inline std::string format_upoly(const UPoly& u, const std::string& var) {
  if (upoly_is_zero(u)) return "0";
  std::string out;
  for (int i = upoly_deg(u); i >= 0; --i) {
    const Rat& c = u[i];
    if (c == 0) continue;
    Mono m{i, 0, 0, 0};
    detail::append_signed(out, c < 0,
                          detail::format_term(c, m, {var, "", "", ""}, 1));
  }
  return out;
}

// Affine (sbar = 1) rendering of a homogeneous binary form.
inline std::string format_hform(const HForm& h) {
  if (h.is_zero()) return "0";
  return format_upoly(h.affine(), "s");
}

// "(s^4 + 1)*y - z - s^2*w": moving form with affine coefficients.
inline std::string format_moving_form(const MovingForm& mf,
                                      const std::array<std::string, 4>& vars) {
  std::string out;
  for (int v = 0; v < mf.arity(); ++v) {
    const HForm& h = mf.coeff(v);
    if (h.is_zero()) continue;
    UPoly u = h.affine();
    int nonzero = 0;
    for (const auto& c : u)
      if (c != 0) ++nonzero;
    if (nonzero == 1) {
      int i = 0;
      while (u[i] == 0) ++i;
      Mono m{i, 0, 0, 0};
      std::string term = detail::format_term(u[i], m, {"s", "", "", ""}, 1);
      if (term == "1")
        term = vars[v];
      else
        term += "*" + vars[v];
      detail::append_signed(out, u[i] < 0, term);
    } else {
      detail::append_signed(out, false,
                            "(" + format_upoly(u, "s") + ")*" + vars[v]);
    }
  }
  return out;
}

}  // namespace mubasis

#endif  // MUBASIS_FORMAT_HPP
