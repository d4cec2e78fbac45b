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

#ifndef MUBASIS_REPORT_HPP
#define MUBASIS_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "mubasis/curve.hpp"
#include "mubasis/format.hpp"
#include "mubasis/ruled.hpp"

namespace mubasis {

using json = nlohmann::json;

// The machine interface. Object keys are kept sorted by the json library,
// all rational values are exact "num/den" strings, so a fixed seed yields
// byte-identical output.

inline json mu_basis_json(const std::vector<MovingForm>& basis) {
  json arr = json::array();
  for (const auto& mf : basis) {
    json coeffs = json::object();
    for (int v = 0; v < mf.arity(); ++v)
      coeffs[kVarsXYZW[v]] = format_hform(mf.coeff(v));
    arr.push_back({{"degree", mf.degree()}, {"coeffs", coeffs}});
  }
  return arr;
}

inline json pluecker_json(const PlueckerSet& set) {
  json arr = json::array();
  for (const HForm* h : set.all()) arr.push_back(format_hform(*h));
  return arr;
}

inline json implicit_json(const MPoly& F, const std::string& frame, int k,
                          int degree, const Rat& content) {
  json terms = json::object();
  for (const auto& [m, c] : F.terms()) {
    std::string key = std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
                      std::to_string(m[2]) + "," + std::to_string(m[3]);
    terms[key] = rat_to_string(c);
  }
  return {{"terms", terms},
          {"frame", frame},
          {"k", k},
          {"degree", degree},
          {"content", rat_to_string(content)}};
}

inline json normalization_json(const NormalizationRecord& rec) {
  json transform = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(rat_to_string(rec.transform[i][j]));
    transform.push_back(row);
  }
  json abc;
  if (rec.generic_combination) {
    abc = json::array();
    for (const auto& c : *rec.generic_combination)
      abc.push_back(rat_to_string(c));
  } else {
    abc = nullptr;
  }
  return {{"t_swap", rec.t_swap},
          {"sbar_division", rec.sbar_division},
          {"index_swap",
           rec.index_swap ? json(*rec.index_swap) : json(nullptr)},
          {"alpha_beta_gamma", abc},
          {"transform", transform},
          {"content_removed", format_hform(rec.content_removed)},
          {"seed", rec.seed}};
}

inline json error_json(const std::string& message, int step,
                       long long offset = -1) {
  json e = {{"message", message}};
  if (step > 0) e["step"] = step;
  if (offset >= 0) e["offset"] = offset;
  return {{"error", e}};
}

}  // namespace mubasis

#endif  // MUBASIS_REPORT_HPP
