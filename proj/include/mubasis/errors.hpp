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

#ifndef MUBASIS_ERRORS_HPP
#define MUBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mubasis {

// Expected failure on user-supplied data: bad syntax, wrong arity,
// degenerate geometry. The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what, int step = 0)
      : std::runtime_error(what), step_(step) {}

  // Normalization pipeline step (1..3) that rejected the input, 0 if
  // not applicable.
  int step() const { return step_; }

 private:
  int step_;
};

// Violated internal invariant: cannot happen on accepted inputs unless
// there is a bug. The CLI maps this to exit code 2.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mubasis

#endif  // MUBASIS_ERRORS_HPP
