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

#ifndef MUBASIS_RULED_HPP
#define MUBASIS_RULED_HPP

#include <array>
#include <optional>
#include <utility>

#include "mubasis/curve.hpp"

namespace mubasis {

// Raw bidegree-(n,1) parametrization: four polynomials in the affine
// parameters, slot 0 carrying s and slot 1 carrying t.
using SurfaceInput = std::array<MPoly, 4>;

// The four coordinate pairs of f_i = tbar * sbar^(n1-n0) * a_i + t * b_i:
// a_i of degree n0 (the tbar side), b_i of degree n1, zero forms allowed,
// with n1 >= n0 and the pair vectors independent over the form ring.
struct RuledParam {
  std::array<HForm, 4> a;
  std::array<HForm, 4> b;
  int n0 = 0;
  int n1 = 0;
};

// Everything normalize did, enough to replay it exactly. `transform` maps
// normalized point coordinates to original ones; it is the identity
// unless the coprimality step acted.
struct NormalizationRecord {
  bool t_swap = false;
  int sbar_division = 0;
  std::optional<int> index_swap;
  std::optional<std::array<Rat, 3>> generic_combination;
  RatMat4 transform = mat4_identity();
  HForm content_removed = HForm::one();
  long long seed = 0;
};

struct PlueckerSet {
  HForm p01, p02, p03, p12, p13, p23;

  std::array<const HForm*, 6> all() const {
    return {&p01, &p02, &p03, &p12, &p13, &p23};
  }
};

struct SurfaceImplicit {
  MPoly F_original;    // primitive, positive first coefficient
  MPoly F_normalized;  // same polynomial in the normalized frame
  int k = 1;           // Res(q1, q2) == content * F_normalized^k
  int degree = 0;
  Rat content;
  std::array<int, 2> mu{0, 0};
  NormalizationRecord normalization;
};

namespace detail {

inline UPoly mpoly_to_upoly_s(const MPoly& p) {
  UPoly u;
  for (const auto& [m, c] : p.terms()) {
    if (m[1] != 0 || m[2] != 0 || m[3] != 0)
      throw internal_error("expected a polynomial in s alone");
    if (static_cast<int>(u.size()) <= m[0]) u.resize(m[0] + 1, Rat(0));
    u[m[0]] = c;
  }
  upoly_trim(u);
  return u;
}

inline bool affine_coprime(const HForm& u, const HForm& v) {
  if (u.is_zero() && v.is_zero()) return false;
  if (u.is_zero()) return upoly_deg(v.affine()) == 0;
  if (v.is_zero()) return upoly_deg(u.affine()) == 0;
  return upoly_deg(upoly_gcd_monic(u.affine(), v.affine())) == 0;
}

inline bool all_pluecker_zero(const std::array<HForm, 4>& a,
                              const std::array<HForm, 4>& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(a[i] * b[j] - b[i] * a[j]).is_zero()) return false;
  return true;
}

}  // namespace detail

// Splits each coordinate into its t-slices, orients the bidegree, strips
// the common content, and arranges a coprime fourth pair: by an index
// swap with the first coprime coordinate, else by adding a random small
// combination of the others to the fourth (retried with fresh draws).
inline std::pair<RuledParam, NormalizationRecord> normalize(
    const SurfaceInput& raw, long long seed) {
  NormalizationRecord rec;
  rec.seed = seed;

  std::array<UPoly, 4> ua, ub;
  for (int i = 0; i < 4; ++i) {
    if (raw[i].deg_in(2) > 0 || raw[i].deg_in(3) > 0)
      throw input_error("surface input must use the variables s and t only",
                        1);
    int dt = raw[i].deg_in(1);
    if (dt > 1)
      throw input_error("not in ruled normal form: coordinate " +
                            std::to_string(i) + " has t-degree " +
                            std::to_string(dt),
                        1);
    ua[i] = detail::mpoly_to_upoly_s(raw[i].coeff_of_power(1, 0));
    ub[i] = detail::mpoly_to_upoly_s(raw[i].coeff_of_power(1, 1));
  }

  bool any = false;
  for (int i = 0; i < 4; ++i)
    any = any || !upoly_is_zero(ua[i]) || !upoly_is_zero(ub[i]);
  if (!any) throw input_error("all surface coordinates are zero", 1);

  int n0 = 0, n1 = 0;
  for (int i = 0; i < 4; ++i) {
    n0 = std::max(n0, upoly_deg(ua[i]));
    n1 = std::max(n1, upoly_deg(ub[i]));
  }
  if (n1 < n0) {
    rec.t_swap = true;
    std::swap(ua, ub);
    std::swap(n0, n1);
  }

  RuledParam p;
  p.n0 = n0;
  p.n1 = n1;
  for (int i = 0; i < 4; ++i) {
    p.a[i] = HForm::from_affine(ua[i], n0);
    p.b[i] = HForm::from_affine(ub[i], n1);
  }

  if (detail::all_pluecker_zero(p.a, p.b))
    throw input_error("degenerate: parametrization does not define a surface");

  std::array<HForm, 8> eight{p.a[0], p.a[1], p.a[2], p.a[3],
                             p.b[0], p.b[1], p.b[2], p.b[3]};
  HForm content = detail::gcd_of(eight);
  if (content.degree() > 0) {
    rec.content_removed = content;
    rec.sbar_division = content.sbar_valuation();
    for (int i = 0; i < 4; ++i) {
      p.a[i] = p.a[i].is_zero() ? p.a[i] : hform_div_exact(p.a[i], content);
      p.b[i] = p.b[i].is_zero() ? p.b[i] : hform_div_exact(p.b[i], content);
    }
    p.n0 -= content.degree();
    p.n1 -= content.degree();
  }

  if (!detail::affine_coprime(p.a[3], p.b[3])) {
    int found = -1;
    for (int i = 0; i < 3; ++i)
      if (detail::affine_coprime(p.a[i], p.b[i])) {
        found = i;
        break;
      }
    if (found >= 0) {
      std::swap(p.a[found], p.a[3]);
      std::swap(p.b[found], p.b[3]);
      rec.index_swap = found;
      rec.transform = mat4_identity();
      std::swap(rec.transform[found], rec.transform[3]);
    } else {
      SeededRng rng(seed);
      constexpr int kRetries = 8;
      bool done = false;
      for (int attempt = 0; attempt < kRetries && !done; ++attempt) {
        std::array<Rat, 3> abc;
        for (auto& c : abc) c = Rat(rng.uniform(-9, 9));
        HForm a3 = p.a[3], b3 = p.b[3];
        for (int i = 0; i < 3; ++i) {
          a3 = a3 + abc[i] * p.a[i];
          b3 = b3 + abc[i] * p.b[i];
        }
        if (!detail::affine_coprime(a3, b3)) continue;
        p.a[3] = a3;
        p.b[3] = b3;
        rec.generic_combination = abc;
        rec.transform = mat4_identity();
        for (int i = 0; i < 3; ++i) rec.transform[3][i] = -abc[i];
        done = true;
      }
      if (!done)
        throw input_error(
            "no coprime fourth coordinate pair found after 8 random "
            "combinations",
            3);
    }
  }
  return {p, rec};
}

// Replays a recorded normalization without re-deciding anything; used to
// check that the record reproduces the normalized parametrization.
inline RuledParam normalize_replay(const SurfaceInput& raw,
                                   const NormalizationRecord& rec) {
  std::array<UPoly, 4> ua, ub;
  for (int i = 0; i < 4; ++i) {
    ua[i] = detail::mpoly_to_upoly_s(raw[i].coeff_of_power(1, 0));
    ub[i] = detail::mpoly_to_upoly_s(raw[i].coeff_of_power(1, 1));
  }
  if (rec.t_swap) std::swap(ua, ub);
  int n0 = 0, n1 = 0;
  for (int i = 0; i < 4; ++i) {
    n0 = std::max(n0, upoly_deg(ua[i]));
    n1 = std::max(n1, upoly_deg(ub[i]));
  }
  RuledParam p;
  for (int i = 0; i < 4; ++i) {
    p.a[i] = HForm::from_affine(ua[i], n0);
    p.b[i] = HForm::from_affine(ub[i], n1);
    if (rec.content_removed.degree() > 0) {
      if (!p.a[i].is_zero()) p.a[i] = hform_div_exact(p.a[i], rec.content_removed);
      if (!p.b[i].is_zero()) p.b[i] = hform_div_exact(p.b[i], rec.content_removed);
    }
  }
  p.n0 = n0 - rec.content_removed.degree();
  p.n1 = n1 - rec.content_removed.degree();
  if (rec.index_swap) {
    std::swap(p.a[*rec.index_swap], p.a[3]);
    std::swap(p.b[*rec.index_swap], p.b[3]);
  } else if (rec.generic_combination) {
    for (int i = 0; i < 3; ++i) {
      p.a[3] = p.a[3] + (*rec.generic_combination)[i] * p.a[i];
      p.b[3] = p.b[3] + (*rec.generic_combination)[i] * p.b[i];
    }
  }
  return p;
}

// All six Pluecker coordinates p_ij = a_i b_j - b_i a_j, homogeneous of
// degree n0 + n1 or zero; the quadric relation is asserted.
inline PlueckerSet pluecker_all(const RuledParam& p) {
  auto pij = [&](int i, int j) { return p.a[i] * p.b[j] - p.b[i] * p.a[j]; };
  PlueckerSet set{pij(0, 1), pij(0, 2), pij(0, 3),
                  pij(1, 2), pij(1, 3), pij(2, 3)};
  HForm quad = set.p01 * set.p23 - set.p02 * set.p13 + set.p03 * set.p12;
  if (!quad.is_zero())
    throw internal_error("Pluecker quadric relation violated");
  return set;
}

// deg(S) * deg(Phi_S) = n1 + n0 - deg(g), with g the homogeneous gcd of
// the Pluecker coordinates. All six enter the gcd: with a coprime fourth
// pair in the homogeneous sense the three p_i3 already carry it, but the
// pipeline only arranges affine coprimality, and the base-point count
// needs the full set (e.g. when every p_i3 gains an sbar from padding).
inline int degree_formula(const RuledParam& p) {
  PlueckerSet set = pluecker_all(p);
  HForm g = HForm::zero();
  for (const HForm* h : set.all()) {
    if (h->is_zero()) continue;
    g = g.is_zero() ? hform_gcd(*h, *h) : hform_gcd(g, *h);
  }
  if (g.is_zero())
    throw internal_error("degree formula on a degenerate parametrization");
  return p.n1 + p.n0 - g.degree();
}

// Image of a moving line under the syzygy-module isomorphism: appends
// the fourth coefficient -(h0 a0 + h1 a1 + h2 a2) / a3 by exact affine
// division (the b-side pair is used when a3 is zero). The degree is
// unchanged whenever the quotient fits inside it, and grows to the
// quotient degree otherwise; the result annihilates both slice vectors.
inline MovingForm lift_syzygy(const MovingForm& h, const RuledParam& p) {
  if (h.arity() != 3)
    throw internal_error("lift expects a moving line");
  HForm num_a = h.pair_with(p.a, 3);
  UPoly h3;
  if (!p.a[3].is_zero()) {
    auto q = num_a.is_zero()
                 ? std::optional<UPoly>(UPoly{})
                 : upoly_div_exact(num_a.affine(), p.a[3].affine());
    if (!q)
      throw internal_error(
          "lift division not exact: coprime fourth pair violated");
    h3 = upoly_neg(*q);
  } else {
    HForm num_b = h.pair_with(p.b, 3);
    if (p.b[3].is_zero())
      throw internal_error("fourth coordinate pair is identically zero");
    auto q = num_b.is_zero()
                 ? std::optional<UPoly>(UPoly{})
                 : upoly_div_exact(num_b.affine(), p.b[3].affine());
    if (!q)
      throw internal_error(
          "lift division not exact: coprime fourth pair violated");
    h3 = upoly_neg(*q);
  }
  int out_deg = std::max(h.degree(), upoly_deg(h3));
  std::array<HForm, 4> c;
  for (int v = 0; v < 3; ++v)
    c[v] = h.coeff(v).shifted_sbar(out_deg - h.degree());
  c[3] = HForm::from_affine(h3, out_deg);
  MovingForm lifted(4, std::move(c));
  if (!lifted.pair_with(p.a, 4).is_zero() ||
      !lifted.pair_with(p.b, 4).is_zero())
    throw internal_error("lifted form is not a surface syzygy");
  return lifted;
}

// The w = 0 specialization: drops the fourth coefficient.
inline MovingForm project_syzygy(const MovingForm& q) {
  if (q.arity() != 4)
    throw internal_error("projection expects a moving plane");
  bool any = false;
  for (int v = 0; v < 3; ++v) any = any || !q.coeff(v).is_zero();
  if (!any)
    throw internal_error(
        "projection of a syzygy supported on the last coordinate alone");
  return MovingForm(3, {q.coeff(0), q.coeff(1), q.coeff(2), HForm::zero()});
}

// mu-basis of the surface: the mu-basis of the curve traced by
// (p03 : p13 : p23), lifted coefficient-wise. Degrees are reported in
// ascending order and their sum matches the degree formula.
inline std::pair<MovingForm, MovingForm> mu_basis_surface(
    const RuledParam& p) {
  PlueckerSet set = pluecker_all(p);
  auto pair = detail::syzygy_pair_basis({set.p03, set.p13, set.p23});
  MovingForm q1 = lift_syzygy(pair.p, p);
  MovingForm q2 = lift_syzygy(pair.q, p);
  if (q2.degree() < q1.degree()) std::swap(q1, q2);
  if (q1.degree() + q2.degree() != degree_formula(p))
    throw internal_error("surface mu-degrees do not match the degree formula");
  return {std::move(q1), std::move(q2)};
}

// F with Res(q1, q2) == content * F^k in the normalized frame, pulled
// back to the original frame through the recorded transform. A plane
// (mu1 = 0) bypasses the Sylvester matrix via Res(q1, q2) = q1^mu2.
inline SurfaceImplicit surface_implicitize(const RuledParam& p,
                                           const NormalizationRecord& rec,
                                           long long seed) {
  auto [q1, q2] = mu_basis_surface(p);
  SurfaceImplicit out;
  out.normalization = rec;
  out.mu = {q1.degree(), q2.degree()};
  if (q1.degree() == 0) {
    auto [cont, prim] = q1.linear_form().content_primitive();
    out.F_normalized = prim;
    out.k = q2.degree();
    out.content = Rat(1);
    for (int i = 0; i < out.k; ++i) out.content *= cont;
  } else {
    MPoly res = sylvester_resultant(q1, q2);
    if (res.is_zero())
      throw internal_error("vanishing mu-basis resultant");
    SeededRng rng(seed);
    out.k = power_exponent_probe(res, rng);
    auto root = mpoly_kth_root(res, out.k, &out.content);
    if (!root)
      throw internal_error("confirmed power exponent failed root extraction");
    out.F_normalized = std::move(*root);
  }
  out.degree = out.F_normalized.total_degree();
  if (out.degree * out.k != out.mu[0] + out.mu[1])
    throw internal_error("implicit degree does not match the mu-degree sum");
  RatMat4 to_normalized = mat4_inverse(rec.transform);
  out.F_original =
      out.F_normalized.substitute_linear(to_normalized).content_primitive()
          .second;
  return out;
}

// Substitutes the parametrization into F and expands; true iff the
// composition vanishes identically. F must be homogeneous so that the
// affine expansion decides the homogeneous statement.
inline bool verify_implicit(const MPoly& F, const SurfaceInput& raw) {
  if (!F.is_homogeneous())
    throw input_error("implicit polynomial must be homogeneous");
  if (F.is_zero()) return true;
  return F.substitute(raw).is_zero();
}

// Moving form re-expressed in original coordinates: coefficients pick up
// the transpose of the normalized-from-original point map.
inline MovingForm to_original_frame(const MovingForm& q,
                                    const NormalizationRecord& rec) {
  if (q.arity() != 4)
    throw internal_error("frame change expects a moving plane");
  RatMat4 e = mat4_inverse(rec.transform);
  std::array<HForm, 4> c;
  for (int j = 0; j < 4; ++j) {
    HForm acc = HForm::zero();
    for (int i = 0; i < 4; ++i) {
      if (q.coeff(i).is_zero() || e[i][j] == 0) continue;
      acc = acc + e[i][j] * q.coeff(i);
    }
    c[j] = acc;
  }
  return MovingForm(4, std::move(c));
}

}  // namespace mubasis

#endif  // MUBASIS_RULED_HPP
