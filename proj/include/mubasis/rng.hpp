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

#ifndef MUBASIS_RNG_HPP
#define MUBASIS_RNG_HPP

#include <cstdint>
#include <random>

#include "mubasis/rational.hpp"

namespace mubasis {

// Deterministic source of small exact values. All randomized operations
// take the generator state explicitly; there is no global randomness.
class SeededRng {
 public:
  explicit SeededRng(long long seed)
      : gen_(static_cast<std::uint64_t>(seed)), seed_(seed) {}

  long long seed() const { return seed_; }

  // Uniform integer in [lo, hi]. Plain modulo keeps the stream identical
  // across standard libraries; the bias is irrelevant at these ranges.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Uniform in [-bound, bound] excluding zero.
  long nonzero(long bound) {
    long v = uniform(1, 2 * bound);
    return v <= bound ? v : bound - v;
  }

  Rat small_rational(long num_bound = 9, long den_bound = 3) {
    Rat r(uniform(-num_bound, num_bound), uniform(1, den_bound));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 gen_;
  long long seed_;
};

}  // namespace mubasis

#endif  // MUBASIS_RNG_HPP
