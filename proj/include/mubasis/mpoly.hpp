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

#ifndef MUBASIS_MPOLY_HPP
#define MUBASIS_MPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mubasis/errors.hpp"
#include "mubasis/rational.hpp"
#include "mubasis/upoly.hpp"

namespace mubasis {

inline constexpr int kMaxVars = 4;

// Exponent quadruple (e_x, e_y, e_z, e_w).
using Mono = std::array<int, kMaxVars>;

inline int mono_total(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

// Descending graded lexicographic order with x > y > z > w, so map
// iteration starts at the leading term and matches serialization order.
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int ta = mono_total(a), tb = mono_total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

// Sparse exact multivariate polynomial in up to four variables. No zero
// coefficients are stored; the zero polynomial is the empty map.
class MPoly {
 public:
  using TermMap = std::map<Mono, Rat, GrlexGreater>;

  MPoly() = default;

  static MPoly constant(const Rat& c) {
    MPoly p;
    if (c != 0) p.terms_[{0, 0, 0, 0}] = c;
    return p;
  }

  static MPoly variable(int v) {
    Mono m{0, 0, 0, 0};
    m.at(v) = 1;
    MPoly p;
    p.terms_[m] = 1;
    return p;
  }

  static MPoly term(const Mono& m, const Rat& c) {
    MPoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && mono_total(terms_.begin()->first) == 0);
  }

  const TermMap& terms() const { return terms_; }

  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : mono_total(terms_.begin()->first);
  }

  int deg_in(int v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d < 0 ? (terms_.empty() ? -1 : 0) : d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree();
    for (const auto& [m, c] : terms_)
      if (mono_total(m) != d) return false;
    return true;
  }

  Rat coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  const std::pair<const Mono, Rat>& leading() const {
    if (terms_.empty()) throw internal_error("leading term of zero");
    return *terms_.begin();
  }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        r.add_term(m, ca * cb);
      }
    return r;
  }

  friend MPoly operator*(const Rat& c, const MPoly& a) {
    if (c == 0) return MPoly();
    MPoly r = a;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }

  MPoly pow(int e) const {
    if (e < 0) throw internal_error("negative polynomial power");
    MPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Terms whose exponent of v equals p, with that exponent removed.
  MPoly coeff_of_power(int v, int p) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[v] != p) continue;
      Mono mm = m;
      mm[v] = 0;
      r.terms_[mm] = c;
    }
    return r;
  }

  MPoly mul_var_power(int v, int p) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      mm[v] += p;
      r.terms_[mm] = c;
    }
    return r;
  }

  // Composition: variable i is replaced by args[i].
  MPoly substitute(const std::array<MPoly, kMaxVars>& args) const {
    // Cached powers keep repeated exponents cheap.
    std::array<std::vector<MPoly>, kMaxVars> pows;
    for (int v = 0; v < kMaxVars; ++v) pows[v].push_back(constant(1));
    MPoly acc;
    for (const auto& [m, c] : terms_) {
      MPoly t = constant(c);
      for (int v = 0; v < kMaxVars; ++v) {
        while (static_cast<int>(pows[v].size()) <= m[v])
          pows[v].push_back(pows[v].back() * args[v]);
        if (m[v] > 0) t = t * pows[v][m[v]];
      }
      acc = acc + t;
    }
    return acc;
  }

  // Linear change of variables: X_i is replaced by sum_j mat[i][j] X_j.
  MPoly substitute_linear(
      const std::array<std::array<Rat, kMaxVars>, kMaxVars>& mat) const {
    std::array<MPoly, kMaxVars> args;
    for (int i = 0; i < kMaxVars; ++i) {
      MPoly li;
      for (int j = 0; j < kMaxVars; ++j)
        li = li + mat[i][j] * variable(j);
      args[i] = li;
    }
    return substitute(args);
  }

  // All variables except `keep` are fixed to the given values.
  UPoly specialize(int keep, const std::array<Rat, kMaxVars>& values) const {
    UPoly u;
    for (const auto& [m, c] : terms_) {
      Rat v = c;
      for (int i = 0; i < kMaxVars; ++i) {
        if (i == keep) continue;
        for (int e = 0; e < m[i]; ++e) v *= values[i];
      }
      if (static_cast<int>(u.size()) <= m[keep]) u.resize(m[keep] + 1, Rat(0));
      u[m[keep]] += v;
    }
    upoly_trim(u);
    return u;
  }

  // Splits off the rational content: *this == content * primitive, where
  // the primitive part has coprime integer coefficients and a positive
  // coefficient on the first term in canonical order.
  std::pair<Rat, MPoly> content_primitive() const {
    if (terms_.empty()) return {Rat(0), MPoly()};
    Int den_lcm(1);
    for (const auto& [m, c] : terms_)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.get_den().get_mpz_t());
    Int num_gcd(0);
    for (const auto& [m, c] : terms_) {
      Int n = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_.begin()->second < 0) content = -content;
    MPoly prim = (1 / content) * *this;
    return {content, prim};
  }

 private:
  TermMap terms_;
};

// Exact quotient a / b, or nullopt when the division leaves a remainder.
inline std::optional<MPoly> mpoly_div_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw internal_error("polynomial division by zero");
  MPoly q, r = a;
  const auto& [lbm, lbc] = b.leading();
  while (!r.is_zero()) {
    const auto& [lm, lc] = r.leading();
    Mono qm;
    for (int i = 0; i < kMaxVars; ++i) {
      qm[i] = lm[i] - lbm[i];
      if (qm[i] < 0) return std::nullopt;
    }
    MPoly t = MPoly::term(qm, lc / lbc);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

// Determinant by fraction-free single-step elimination; every division
// is exact over the entry ring. Empty matrix gives 1.
inline MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
  int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw internal_error("determinant of a non-square matrix");
  if (n == 0) return MPoly::constant(1);
  int sign = 1;
  MPoly prev = MPoly::constant(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) return MPoly();
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = mpoly_div_exact(num, prev);
        if (!q)
          throw internal_error("fraction-free elimination: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace mubasis

#endif  // MUBASIS_MPOLY_HPP
