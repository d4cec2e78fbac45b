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

#ifndef MUBASIS_KTH_ROOT_HPP
#define MUBASIS_KTH_ROOT_HPP

#include <numeric>
#include <optional>
#include <utility>

#include "mubasis/mpoly.hpp"
#include "mubasis/rng.hpp"

namespace mubasis {

namespace detail {

// First variable the polynomial actually depends on, -1 if constant.
inline int main_variable(const MPoly& p) {
  for (int v = 0; v < kMaxVars; ++v)
    if (p.deg_in(v) > 0) return v;
  return -1;
}

// Raw root: G with G^k == F exactly over Rat, no normalization.
inline std::optional<MPoly> exact_kth_root(const MPoly& F, int k) {
  if (F.is_zero()) return MPoly();
  if (k == 1) return F;
  for (int v = 0; v < kMaxVars; ++v)
    if (F.deg_in(v) % k != 0) return std::nullopt;
  int x = main_variable(F);
  if (x < 0) {
    auto r = rat_kth_root_exact(F.leading().second, k);
    if (!r) return std::nullopt;
    return MPoly::constant(*r);
  }
  int dx = F.deg_in(x);
  int m = dx / k;
  auto gm = exact_kth_root(F.coeff_of_power(x, dx), k);
  if (!gm) return std::nullopt;
  MPoly G = gm->mul_var_power(x, m);
  // Coefficient matching: at x-power (k-1)m + i the only unknown
  // contribution to G^k is k * gm^(k-1) * g_i.
  MPoly divisor = Rat(k) * gm->pow(k - 1);
  for (int i = m - 1; i >= 0; --i) {
    MPoly gk = G.pow(k);
    MPoly diff = F.coeff_of_power(x, (k - 1) * m + i) -
                 gk.coeff_of_power(x, (k - 1) * m + i);
    if (diff.is_zero()) continue;
    auto gi = mpoly_div_exact(diff, divisor);
    if (!gi) return std::nullopt;
    G = G + gi->mul_var_power(x, i);
  }
  if (!(G.pow(k) == F)) return std::nullopt;
  return G;
}

}  // namespace detail

// G with F == content * G^k, G primitive over the integers with positive
// first coefficient in canonical term order; nullopt when F is not a
// perfect k-th power up to rational content.
inline std::optional<MPoly> mpoly_kth_root(const MPoly& F, int k,
                                           Rat* content = nullptr) {
  if (F.is_zero() || k < 1)
    throw internal_error("k-th root requires a nonzero input and k >= 1");
  if (F.total_degree() % k != 0) return std::nullopt;
  auto [c, prim] = F.content_primitive();
  auto root = detail::exact_kth_root(prim, k);
  if (!root) return std::nullopt;
  auto [rc, rprim] = root->content_primitive();
  if (content) {
    Rat rck(1);
    for (int i = 0; i < k; ++i) rck *= rc;
    *content = c * rck;
  }
  return rprim;
}

// Largest k with F a perfect k-th power up to rational content. All but
// one variable are specialized to small random values, the gcd of the
// squarefree multiplicities gives a candidate, a full root extraction
// confirms it; bounded retries, then divisors of the total degree in
// descending order. k = 1 always remains valid.
inline int power_exponent_probe(const MPoly& F, SeededRng& rng) {
  if (F.is_zero() || F.is_constant())
    throw internal_error("power exponent probe requires a nonconstant input");
  auto [c, prim] = F.content_primitive();
  int x = detail::main_variable(prim);
  int dx = prim.deg_in(x);
  constexpr int kRetries = 8;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::array<Rat, kMaxVars> values;
    for (int v = 0; v < kMaxVars; ++v) values[v] = rng.small_rational();
    UPoly u = prim.specialize(x, values);
    if (upoly_deg(u) != dx) continue;
    auto mult = upoly_squarefree_multiplicities(u);
    if (mult.empty()) continue;
    int k = 0;
    for (int mi : mult) k = std::gcd(k, mi);
    if (k == 1) return 1;
    if (mpoly_kth_root(F, k)) return k;
  }
  int d = prim.total_degree();
  for (int k = d; k >= 2; --k) {
    if (d % k != 0) continue;
    if (mpoly_kth_root(F, k)) return k;
  }
  return 1;
}

inline int power_exponent_probe(const MPoly& F, long long seed) {
  SeededRng rng(seed);
  return power_exponent_probe(F, rng);
}

}  // namespace mubasis

#endif  // MUBASIS_KTH_ROOT_HPP
