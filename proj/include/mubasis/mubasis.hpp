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

#ifndef MUBASIS_MUBASIS_HPP
#define MUBASIS_MUBASIS_HPP

#include "mubasis/curve.hpp"
#include "mubasis/format.hpp"
#include "mubasis/hform.hpp"
#include "mubasis/kth_root.hpp"
#include "mubasis/linalg.hpp"
#include "mubasis/moving_form.hpp"
#include "mubasis/mpoly.hpp"
#include "mubasis/parse.hpp"
#include "mubasis/rational.hpp"
#include "mubasis/rng.hpp"
#include "mubasis/ruled.hpp"
#include "mubasis/upoly.hpp"

#endif  // MUBASIS_MUBASIS_HPP
