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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mubasis/report.hpp"

using namespace mubasis;
using namespace mubasis::testing;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), static_cast<long long>(ms),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = "failed: " + what;
  return cond;
}

SurfaceInput octic_raw() {
  return {parse_poly("s^2+t*(s^2-1)"), parse_poly("1+t*(-s^2+1)"),
          parse_poly("1+t*(-s^6+1)"), parse_poly("t*(-s^6-2*s^2)")};
}

// The reference quartic (normalized frame, w = 1).
MPoly reference_quartic() {
  static const char* kText =
      "4*x^2*y^2 - 4*x*y^3 + y^4 - 4*x^2*y*z + 2*x*y^2*z + x^2*z^2 + "
      "4*x*y*z^2 - 2*y^2*z^2 - 2*x*z^3 + z^4 - x^2 + x*y + 2*y^2 - x*z - "
      "4*y*z + 2*z^2";
  static const std::vector<std::string> vars = {"x", "y", "z", "w"};
  return parse_polynomial(kText, vars);
}

MPoly dehomogenize_w(const MPoly& p) {
  MPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term({m[0], m[1], m[2], 0}, c);
  return r;
}

bool criterion1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SurfaceInput raw = octic_raw();
  auto [p, rec] = normalize(raw, 0);
  bool ok = expect(rec.index_swap && *rec.index_swap == 0, "index swap 0",
                   detail);
  PlueckerSet set = pluecker_all(p);
  ok = expect(format_hform(set.p03) == "s^8 + 2*s^4", "p03 value", detail) && ok;
  ok = expect(format_hform(set.p13) == "s^4 - 1", "p13 value", detail) && ok;
  ok = expect(format_hform(set.p23) == "s^8 - 1", "p23 value", detail) && ok;
  auto [q1, q2] = mu_basis_surface(p);
  ok = expect(q1.degree() == 4 && q2.degree() == 4, "mu-degrees (4,4)",
              detail) && ok;
  ok = expect(q1.degree() + q2.degree() == 8, "8x8 Sylvester matrix",
              detail) && ok;
  MPoly res = sylvester_resultant(q1, q2);
  MPoly ref = reference_quartic();
  ok = expect(scalar_multiple(dehomogenize_w(res), ref * ref),
              "resultant equals the reference quartic squared", detail) && ok;
  SurfaceImplicit impl = surface_implicitize(p, rec, 0);
  ok = expect(impl.k == 2, "k = 2", detail) && ok;
  ok = expect(impl.degree == 4, "deg F = 4", detail) && ok;
  ok = expect(scalar_multiple(dehomogenize_w(impl.F_normalized), ref),
              "extracted F matches the reference quartic", detail) && ok;
  ok = expect(degree_formula(p) == 8, "degree formula = 8", detail) && ok;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  ok = expect(ms < 1000, "runtime below 1 s", detail) && ok;
  return ok;
}

bool criterion2(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SurfaceInput raw = {parse_poly("s"), parse_poly("t"), parse_poly("s*t"),
                      parse_poly("1")};
  auto [p, rec] = normalize(raw, 0);
  auto [q1, q2] = mu_basis_surface(p);
  bool ok = expect(q1.degree() == 1 && q2.degree() == 1, "mu-degrees (1,1)",
                   detail);
  SurfaceImplicit impl = surface_implicitize(p, rec, 0);
  MPoly quadric = MPoly::variable(0) * MPoly::variable(1) -
                  MPoly::variable(2) * MPoly::variable(3);
  ok = expect(scalar_multiple(impl.F_original, quadric), "F = xy - zw",
              detail) && ok;
  ok = expect(impl.k == 1, "k = 1", detail) && ok;
  ok = expect(verify_implicit(impl.F_original, raw), "verified", detail) && ok;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  ok = expect(ms < 100, "runtime below 100 ms", detail) && ok;
  return ok;
}

bool criterion3(std::string& detail) {
  MPoly conic = MPoly::variable(0) * MPoly::variable(2) -
                MPoly::variable(1) * MPoly::variable(1);
  // (s^2, s sbar, sbar^2)
  CurveParam c1({hf(2, {0, 0, 1}), hf(2, {0, 1, 0}), hf(2, {1, 0, 0})}, 2);
  CurveImplicit i1 = curve_implicitize(c1, 0);
  bool ok = expect(scalar_multiple(i1.F, conic) && i1.k == 1,
                   "single conic: F = xz - y^2, k = 1", detail);
  // (s^4, s^2 sbar^2, sbar^4)
  CurveParam c2({hf(4, {0, 0, 0, 0, 1}), hf(4, {0, 0, 1, 0, 0}),
                 hf(4, {1, 0, 0, 0, 0})},
                4);
  MuBasisCurve b2 = mu_basis_curve(c2);
  ok = expect(b2.mu1() == 2 && b2.mu2() == 2, "double conic mu-degrees (2,2)",
              detail) && ok;
  CurveImplicit i2 = curve_implicitize(c2, 0);
  ok = expect(scalar_multiple(i2.F, conic) && i2.k == 2,
              "double conic: F = xz - y^2, k = 2", detail) && ok;
  // the same determinants through an independent cofactor expansion
  for (const CurveParam* c : {&c1, &c2}) {
    MuBasisCurve b = mu_basis_curve(*c);
    int mu1 = b.mu1(), mu2 = b.mu2();
    std::vector<std::vector<MPoly>> m(mu1 + mu2,
                                      std::vector<MPoly>(mu1 + mu2));
    for (int r = 0; r < mu2; ++r)
      for (int j = 0; j <= mu1; ++j)
        m[r][r + j] = b.p.linear_coeff(mu1 - j);
    for (int r = 0; r < mu1; ++r)
      for (int j = 0; j <= mu2; ++j)
        m[mu2 + r][r + j] = b.q.linear_coeff(mu2 - j);
    ok = expect(cofactor_det(m) == sylvester_resultant(b.p, b.q),
                "cofactor oracle agrees with the Sylvester determinant",
                detail) && ok;
  }
  return ok;
}

bool criterion4(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SeededRng rng(424242);
  bool ok = true;

  for (int iter = 0; iter < 50 && ok; ++iter) {
    CurveParam c = random_curve(rng, 6);
    HForm g = mubasis::detail::gcd_of(c.f);
    MuBasisCurve b = mu_basis_curve(c);
    ok = expect(b.mu1() + b.mu2() == c.degree - g.degree(),
                "curve degree sum", detail) && ok;
    std::array<HForm, 4> f4{c.f[0], c.f[1], c.f[2], HForm::zero()};
    ok = expect(b.p.pair_with(f4, 3).is_zero() &&
                    b.q.pair_with(f4, 3).is_zero(),
                "curve mu-basis annihilation", detail) && ok;
    // cross-product certificate up to one scalar
    auto term = [&](int i, int j) {
      return b.p.coeff(i) * b.q.coeff(j) - b.p.coeff(j) * b.q.coeff(i);
    };
    std::array<HForm, 3> pr{term(1, 2), term(2, 0), term(0, 1)};
    Rat scale;
    bool scale_set = false;
    for (int v = 0; v < 3 && ok; ++v) {
      HForm reduced =
          c.f[v].is_zero() ? HForm::zero() : hform_div_exact(c.f[v], g);
      ok = expect(pr[v].is_zero() == reduced.is_zero(),
                  "cross-product support", detail) && ok;
      if (!ok || pr[v].is_zero()) continue;
      if (!scale_set) {
        scale = reduced.coeffs()[reduced.s_valuation()] /
                pr[v].coeffs()[pr[v].s_valuation()];
        scale_set = true;
      }
      ok = expect(scale * pr[v] == reduced, "cross-product certificate",
                  detail) && ok;
    }
    ok = expect(scale_set, "cross-product certificate nonzero", detail) && ok;
  }

  for (int iter = 0; iter < 50 && ok; ++iter) {
    SurfaceInput raw = random_surface(rng, 4, 4);
    long long seed = 10'000 + iter;
    auto [p, rec] = normalize(raw, seed);
    PlueckerSet set = pluecker_all(p);
    HForm quad = set.p01 * set.p23 - set.p02 * set.p13 + set.p03 * set.p12;
    ok = expect(quad.is_zero(), "Pluecker quadric relation", detail) && ok;

    bool hom_coprime = !p.a[3].is_zero() && !p.b[3].is_zero() &&
                       hform_gcd(p.a[3], p.b[3]).degree() == 0;
    if (hom_coprime) {
      HForm g3 = HForm::zero(), g6 = HForm::zero();
      for (const HForm* h : {&set.p03, &set.p13, &set.p23}) {
        if (h->is_zero()) continue;
        g3 = g3.is_zero() ? hform_gcd(*h, *h) : hform_gcd(g3, *h);
      }
      for (const HForm* h : set.all()) {
        if (h->is_zero()) continue;
        g6 = g6.is_zero() ? hform_gcd(*h, *h) : hform_gcd(g6, *h);
      }
      ok = expect(g3 == g6, "projected gcd equals the full gcd", detail) && ok;
    }

    auto [q1, q2] = mu_basis_surface(p);
    ok = expect(q1.pair_with(p.a, 4).is_zero() &&
                    q1.pair_with(p.b, 4).is_zero() &&
                    q2.pair_with(p.a, 4).is_zero() &&
                    q2.pair_with(p.b, 4).is_zero(),
                "surface mu-basis annihilation", detail) && ok;
    ok = expect(lift_syzygy(project_syzygy(q1), p) == q1 &&
                    lift_syzygy(project_syzygy(q2), p) == q2,
                "lift after projection is the identity", detail) && ok;

    SurfaceImplicit impl = surface_implicitize(p, rec, seed);
    ok = expect(impl.degree * impl.k == degree_formula(p),
                "deg(F) * k matches the degree formula", detail) && ok;
    ok = expect(verify_implicit(impl.F_original, raw),
                "original-frame implicit equation vanishes", detail) && ok;
    SurfaceImplicit impl2 = surface_implicitize(p, rec, seed + 999'983);
    ok = expect(impl.F_normalized == impl2.F_normalized,
                "seed independence of the primitive implicit equation",
                detail) && ok;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  ok = expect(ms < 60'000, "runtime below 60 s", detail) && ok;
  if (detail.empty())
    detail = "50 curves and 50 surfaces in " + std::to_string(ms) + " ms";
  return ok;
}

bool criterion5(std::string& detail) {
  SeededRng rng(5150);
  bool ok = true;
  for (int iter = 0; iter < 12 && ok; ++iter) {
    CurveParam c = random_curve(rng, 5);
    CurveImplicit impl = curve_implicitize(c, 700 + iter);
    MPoly oracle = implicitize_by_linear_algebra(c, impl.degree);
    ok = expect(impl.F == oracle,
                "resultant implicitization equals the unknown-coefficient "
                "oracle",
                detail) && ok;
  }
  return ok;
}

bool criterion6(std::string& detail) {
  // the golden suite, twice, through the library JSON path
  auto render = []() {
    std::ostringstream out;
    {
      SurfaceInput raw = octic_raw();
      auto [p, rec] = normalize(raw, 42);
      SurfaceImplicit impl = surface_implicitize(p, rec, 42);
      auto [q1, q2] = mu_basis_surface(p);
      json doc = {{"implicit", implicit_json(impl.F_original, "original",
                                             impl.k, impl.degree,
                                             impl.content)},
                  {"mu_basis", mu_basis_json({q1, q2})},
                  {"pluecker", pluecker_json(pluecker_all(p))},
                  {"normalization", normalization_json(rec)}};
      out << doc.dump(2) << "\n";
    }
    {
      SurfaceInput raw = {parse_poly("s"), parse_poly("t"), parse_poly("s*t"),
                          parse_poly("1")};
      auto [p, rec] = normalize(raw, 42);
      SurfaceImplicit impl = surface_implicitize(p, rec, 42);
      out << implicit_json(impl.F_original, "original", impl.k, impl.degree,
                           impl.content)
                 .dump(2)
          << "\n";
    }
    {
      CurveParam c({hf(4, {0, 0, 0, 0, 1}), hf(4, {0, 0, 1, 0, 0}),
                    hf(4, {1, 0, 0, 0, 0})},
                   4);
      CurveImplicit impl = curve_implicitize(c, 42);
      out << implicit_json(impl.F, "original", impl.k, impl.degree,
                           impl.content)
                 .dump(2)
          << "\n";
    }
    return out.str();
  };
  std::string first = render();
  std::string second = render();
  bool ok = expect(!first.empty() && first == second,
                   "byte-identical JSON across repeated runs", detail);
  if (ok) detail = std::to_string(first.size()) + " bytes compared";
  return ok;
}

}  // namespace

int main() {
  criterion(1, "reference octic ruled surface end-to-end", criterion1);
  criterion(2, "hyperbolic paraboloid", criterion2);
  criterion(3, "conic curve suite with cofactor oracle", criterion3);
  criterion(4, "property suite over seeded random parametrizations",
            criterion4);
  criterion(5, "curve implicitization against the linear-algebra oracle",
            criterion5);
  criterion(6, "determinism of the golden-suite JSON", criterion6);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
