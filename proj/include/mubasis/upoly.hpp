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

#ifndef MUBASIS_UPOLY_HPP
#define MUBASIS_UPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mubasis/errors.hpp"
#include "mubasis/rational.hpp"

namespace mubasis {

// Dense univariate polynomial over Rat; coeff[i] multiplies s^i.
// Normal form carries no trailing zeros; the zero polynomial is empty.
using UPoly = std::vector<Rat>;

inline void upoly_trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

inline bool upoly_is_zero(const UPoly& u) { return u.empty(); }

inline int upoly_deg(const UPoly& u) {
  return static_cast<int>(u.size()) - 1;
}

inline UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  upoly_trim(r);
  return r;
}

inline UPoly upoly_neg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  return upoly_add(a, upoly_neg(b));
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  upoly_trim(r);
  return r;
}

inline UPoly upoly_scale(UPoly a, const Rat& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

inline std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw internal_error("univariate division by zero");
  UPoly q, r = a;
  int db = upoly_deg(b);
  const Rat& lb = b.back();
  while (upoly_deg(r) >= db) {
    int shift = upoly_deg(r) - db;
    Rat c = r.back() / lb;
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rat(0));
    q[shift] += c;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
    upoly_trim(r);
  }
  upoly_trim(q);
  return {q, r};
}

inline std::optional<UPoly> upoly_div_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = upoly_divmod(a, b);
  if (!r.empty()) return std::nullopt;
  return q;
}

inline void upoly_make_monic(UPoly& u) {
  if (u.empty() || u.back() == 1) return;
  Rat inv = 1 / u.back();
  for (auto& c : u) c *= inv;
}

inline UPoly upoly_gcd_monic(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto [q, r] = upoly_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  upoly_make_monic(a);
  return a;
}

inline UPoly upoly_derivative(const UPoly& u) {
  if (u.size() <= 1) return {};
  UPoly d(u.size() - 1);
  for (std::size_t i = 1; i < u.size(); ++i) d[i - 1] = u[i] * Rat(i);
  upoly_trim(d);
  return d;
}

inline Rat upoly_eval(const UPoly& u, const Rat& x) {
  Rat acc(0);
  for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Multiplicities occurring in the squarefree decomposition u = c * prod
// a_i^i (Yun's algorithm); only indices with nonconstant a_i are listed.
inline std::vector<int> upoly_squarefree_multiplicities(const UPoly& u) {
  std::vector<int> mult;
  if (upoly_deg(u) < 1) return mult;
  UPoly du = upoly_derivative(u);
  UPoly g = upoly_gcd_monic(u, du);
  if (upoly_deg(g) == 0) {
    mult.push_back(1);
    return mult;
  }
  UPoly w = *upoly_div_exact(u, g);
  UPoly y = *upoly_div_exact(du, g);
  UPoly z = upoly_sub(y, upoly_derivative(w));
  int i = 1;
  while (upoly_deg(w) > 0) {
    UPoly a = upoly_gcd_monic(w, z);
    if (upoly_deg(a) > 0) mult.push_back(i);
    w = *upoly_div_exact(w, a);
    y = *upoly_div_exact(z, a);
    z = upoly_sub(y, upoly_derivative(w));
    ++i;
  }
  return mult;
}

}  // namespace mubasis

#endif  // MUBASIS_UPOLY_HPP
