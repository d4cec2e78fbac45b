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

#ifndef MUBASIS_RATIONAL_HPP
#define MUBASIS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "mubasis/errors.hpp"

namespace mubasis {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_from_string(const std::string& text) {
  Rat v;
  try {
    v = Rat(text);
  } catch (const std::invalid_argument&) {
    throw input_error("invalid rational literal: \"" + text + "\"");
  }
  if (v.get_den() == 0)
    throw input_error("zero denominator in rational literal: \"" + text + "\"");
  v.canonicalize();
  return v;
}

inline std::string rat_to_string(const Rat& v) { return v.get_str(); }

// r with r^k == n, if such an integer exists.
inline std::optional<Int> int_kth_root_exact(const Int& n, int k) {
  if (k == 1) return n;
  if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
  Int root;
  int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return root;
}

inline std::optional<Rat> rat_kth_root_exact(const Rat& v, int k) {
  auto num = int_kth_root_exact(Int(v.get_num()), k);
  if (!num) return std::nullopt;
  auto den = int_kth_root_exact(Int(v.get_den()), k);
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace mubasis

#endif  // MUBASIS_RATIONAL_HPP
