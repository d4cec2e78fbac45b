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

#ifndef MUBASIS_LINALG_HPP
#define MUBASIS_LINALG_HPP

#include <array>
#include <utility>
#include <vector>

#include "mubasis/errors.hpp"
#include "mubasis/rational.hpp"

namespace mubasis {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rat inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Kernel basis of m (as a map on column vectors), one vector per free
// column in ascending column order: the canonical echelon basis.
inline std::vector<RatVec> kernel_basis(RatMat m, int cols) {
  for (auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw internal_error("kernel: ragged matrix");
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scales to coprime integers with the first nonzero entry positive.
inline void make_primitive(RatVec& v) {
  Int den_lcm(1);
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        x.get_den().get_mpz_t());
  Int num_gcd(0);
  for (const auto& x : v) {
    if (x == 0) continue;
    Int n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (auto& x : v)
    if (x != 0) x *= scale;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

using RatMat4 = std::array<std::array<Rat, 4>, 4>;

inline RatMat4 mat4_identity() {
  RatMat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Rat(i == j ? 1 : 0);
  return m;
}

inline RatMat4 mat4_inverse(const RatMat4& a) {
  RatMat m(4, RatVec(8, Rat(0)));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = a[i][j];
    m[i][4 + i] = 1;
  }
  auto pivots = rref(m);
  if (pivots != std::vector<int>{0, 1, 2, 3})
    throw internal_error("singular coordinate transform");
  RatMat4 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = m[i][4 + j];
  return inv;
}

// Incremental row space; used to pick vectors outside a given span.
class SpanTracker {
 public:
  // True if v was outside the span (and is now added to it).
  bool add(RatVec v) {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      Rat f = v[col];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    int lead = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) return false;
    Rat inv = 1 / v[lead];
    for (auto& x : v) x *= inv;
    rows_.emplace_back(lead, std::move(v));
    return true;
  }

  bool contains(RatVec v) {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      Rat f = v[col];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }

 private:
  std::vector<std::pair<int, RatVec>> rows_;
};

}  // namespace mubasis

#endif  // MUBASIS_LINALG_HPP
