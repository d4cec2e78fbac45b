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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mubasis/mubasis.hpp"
#include "mubasis/report.hpp"

namespace {

using namespace mubasis;

struct CliConfig {
  std::vector<std::string> inputs;
  std::string file;
  std::string frame = "original";
  long long seed = 0;
  bool seed_given = false;
  bool json_output = false;
};

long long resolve_seed(const CliConfig& cfg) {
  if (cfg.seed_given) return cfg.seed;
  if (const char* env = std::getenv("MUBASIS_SEED")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw input_error("MUBASIS_SEED is not an integer: \"" +
                        std::string(env) + "\"");
    }
  }
  return 0;
}

// One polynomial per line; '#' starts a comment, blank lines are skipped.
std::vector<std::string> read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  std::vector<std::string> polys;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) polys.push_back(line);
  }
  return polys;
}

std::vector<std::string> gather_inputs(const CliConfig& cfg,
                                       std::size_t arity,
                                       const std::string& what) {
  std::vector<std::string> inputs = cfg.inputs;
  if (!cfg.file.empty()) {
    if (!inputs.empty())
      throw input_error("give polynomials either inline or via --file");
    inputs = read_input_file(cfg.file);
  }
  if (inputs.size() != arity)
    throw input_error(what + " takes " + std::to_string(arity) +
                      " polynomials, got " + std::to_string(inputs.size()));
  return inputs;
}

CurveParam parse_curve(const std::vector<std::string>& inputs) {
  static const std::vector<std::string> vars = {"s"};
  std::array<UPoly, 3> u;
  for (int i = 0; i < 3; ++i)
    u[i] = detail::mpoly_to_upoly_s(parse_polynomial(inputs[i], vars));
  return CurveParam::from_affine(u);
}

SurfaceInput parse_surface(const std::vector<std::string>& inputs) {
  SurfaceInput raw;
  for (int i = 0; i < 4; ++i) raw[i] = parse_poly(inputs[i]);
  return raw;
}

void emit(const CliConfig& cfg, const json& machine,
          const std::string& human) {
  if (cfg.json_output)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

std::string human_normalization(const NormalizationRecord& rec) {
  std::string out;
  out += "normalization: t_swap=" + std::string(rec.t_swap ? "yes" : "no");
  if (rec.index_swap)
    out += ", index_swap=" + std::to_string(*rec.index_swap);
  if (rec.generic_combination) {
    out += ", combination=(";
    for (int i = 0; i < 3; ++i)
      out += (i ? "," : "") + rat_to_string((*rec.generic_combination)[i]);
    out += ")";
  }
  if (rec.content_removed.degree() > 0)
    out += ", content=" + format_hform(rec.content_removed);
  out += "\n";
  return out;
}

int run_pluecker(const CliConfig& cfg) {
  auto raw = parse_surface(gather_inputs(cfg, 4, "pluecker"));
  auto [p, rec] = normalize(raw, resolve_seed(cfg));
  PlueckerSet set = pluecker_all(p);
  json machine = {{"command", "pluecker"},
                  {"pluecker", pluecker_json(set)},
                  {"n0", p.n0},
                  {"n1", p.n1},
                  {"normalization", normalization_json(rec)}};
  std::string human = human_normalization(rec);
  const char* names[6] = {"p01", "p02", "p03", "p12", "p13", "p23"};
  auto all = set.all();
  for (int i = 0; i < 6; ++i)
    human += std::string(names[i]) + " = " + format_hform(*all[i]) + "\n";
  emit(cfg, machine, human);
  return 0;
}

int run_mubasis_curve(const CliConfig& cfg) {
  CurveParam c = parse_curve(gather_inputs(cfg, 3, "mubasis-curve"));
  MuBasisCurve basis = mu_basis_curve(c);
  json machine = {{"command", "mubasis-curve"},
                  {"mu_basis", mu_basis_json({basis.p, basis.q})},
                  {"mu", {basis.mu1(), basis.mu2()}},
                  {"line", basis.line}};
  std::string human = "mu-degrees: (" + std::to_string(basis.mu1()) + ", " +
                      std::to_string(basis.mu2()) + ")\n";
  human += "p = " + format_moving_form(basis.p, kVarsXYZW) + "\n";
  human += "q = " + format_moving_form(basis.q, kVarsXYZW) + "\n";
  if (basis.line) human += "note: the curve is a line (mu1 = 0)\n";
  emit(cfg, machine, human);
  return 0;
}

int run_mubasis_surface(const CliConfig& cfg) {
  auto raw = parse_surface(gather_inputs(cfg, 4, "mubasis-surface"));
  auto [p, rec] = normalize(raw, resolve_seed(cfg));
  auto [q1, q2] = mu_basis_surface(p);
  bool original = cfg.frame == "original";
  MovingForm r1 = original ? to_original_frame(q1, rec) : q1;
  MovingForm r2 = original ? to_original_frame(q2, rec) : q2;
  json machine = {{"command", "mubasis-surface"},
                  {"frame", cfg.frame},
                  {"mu_basis", mu_basis_json({r1, r2})},
                  {"mu", {q1.degree(), q2.degree()}},
                  {"normalization", normalization_json(rec)}};
  std::string human = human_normalization(rec);
  human += "mu-degrees: (" + std::to_string(q1.degree()) + ", " +
           std::to_string(q2.degree()) + ")\n";
  human += "q1 = " + format_moving_form(r1, kVarsXYZW) + "\n";
  human += "q2 = " + format_moving_form(r2, kVarsXYZW) + "\n";
  emit(cfg, machine, human);
  return 0;
}

int run_implicitize_curve(const CliConfig& cfg) {
  CurveParam c = parse_curve(gather_inputs(cfg, 3, "implicitize-curve"));
  CurveImplicit impl = curve_implicitize(c, resolve_seed(cfg));
  json machine = {{"command", "implicitize-curve"},
                  {"implicit", implicit_json(impl.F, "original", impl.k,
                                             impl.degree, impl.content)},
                  {"line", impl.line}};
  std::string human = "F = " + format_mpoly(impl.F, kVarsXYZW) + "\n";
  human += "k = " + std::to_string(impl.k) +
           ", degree = " + std::to_string(impl.degree) +
           ", content = " + rat_to_string(impl.content) + "\n";
  emit(cfg, machine, human);
  return 0;
}

int run_implicitize_surface(const CliConfig& cfg) {
  auto raw = parse_surface(gather_inputs(cfg, 4, "implicitize-surface"));
  auto [p, rec] = normalize(raw, resolve_seed(cfg));
  SurfaceImplicit impl = surface_implicitize(p, rec, resolve_seed(cfg));
  const MPoly& F =
      cfg.frame == "original" ? impl.F_original : impl.F_normalized;
  json machine = {{"command", "implicitize-surface"},
                  {"implicit", implicit_json(F, cfg.frame, impl.k, impl.degree,
                                             impl.content)},
                  {"mu", {impl.mu[0], impl.mu[1]}},
                  {"normalization", normalization_json(rec)}};
  std::string human = human_normalization(rec);
  human += "mu-degrees: (" + std::to_string(impl.mu[0]) + ", " +
           std::to_string(impl.mu[1]) + ")\n";
  human += "F (original frame)   = " +
           format_mpoly(impl.F_original, kVarsXYZW) + "\n";
  human += "F (normalized frame) = " +
           format_mpoly(impl.F_normalized, kVarsXYZW) + "\n";
  human += "k = " + std::to_string(impl.k) +
           ", degree = " + std::to_string(impl.degree) +
           ", content = " + rat_to_string(impl.content) + "\n";
  emit(cfg, machine, human);
  return 0;
}

int run_degrees(const CliConfig& cfg) {
  auto raw = parse_surface(gather_inputs(cfg, 4, "degrees"));
  auto [p, rec] = normalize(raw, resolve_seed(cfg));
  int product = degree_formula(p);
  auto [q1, q2] = mu_basis_surface(p);
  json machine = {{"command", "degrees"},
                  {"n0", p.n0},
                  {"n1", p.n1},
                  {"degree_product", product},
                  {"mu", {q1.degree(), q2.degree()}},
                  {"normalization", normalization_json(rec)}};
  std::string human = human_normalization(rec);
  human += "n0 = " + std::to_string(p.n0) + ", n1 = " + std::to_string(p.n1) +
           "\n";
  human += "deg(S) * deg(Phi) = " + std::to_string(product) + "\n";
  human += "mu-degrees: (" + std::to_string(q1.degree()) + ", " +
           std::to_string(q2.degree()) + ")\n";
  emit(cfg, machine, human);
  return 0;
}

int run_verify(const CliConfig& cfg) {
  auto inputs = gather_inputs(cfg, 5, "verify");
  static const std::vector<std::string> vars = {"x", "y", "z", "w"};
  MPoly F = parse_polynomial(inputs[0], vars);
  if (F.is_zero()) throw input_error("implicit polynomial is zero");
  if (!F.is_homogeneous()) {
    // Dehomogenized input: restore the w power on every term.
    int d = F.total_degree();
    MPoly hom;
    for (const auto& [m, c] : F.terms()) {
      if (m[3] != 0)
        throw input_error(
            "implicit polynomial must be homogeneous or w-free");
      hom.add_term({m[0], m[1], m[2], d - mono_total(m)}, c);
    }
    F = hom;
  }
  SurfaceInput raw;
  for (int i = 0; i < 4; ++i) raw[i] = parse_poly(inputs[i + 1]);
  for (int i = 0; i < 4; ++i)
    if (raw[i].deg_in(1) > 1)
      throw input_error("not in ruled normal form: coordinate " +
                            std::to_string(i) + " has t-degree " +
                            std::to_string(raw[i].deg_in(1)),
                        1);
  bool ok = verify_implicit(F, raw);
  json machine = {{"command", "verify"}, {"verified", ok}};
  emit(cfg, machine, std::string(ok ? "true" : "false") + "\n");
  return 0;
}

void add_common(CLI::App* cmd, CliConfig& cfg, int arity) {
  cmd->add_option("polys", cfg.inputs,
                  std::to_string(arity) + " polynomial(s)");
  cmd->add_option("--file", cfg.file,
                  "read polynomials from a file (one per line, # comments)");
  cmd->add_option("--seed", cfg.seed, "seed for randomized choices")
      ->check(CLI::Number)
      ->each([&cfg](const std::string&) { cfg.seed_given = true; });
  cmd->add_flag("--json", cfg.json_output, "machine-readable JSON output");
  cmd->add_option("--frame", cfg.frame, "report coordinates frame")
      ->check(CLI::IsMember({"original", "normalized"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact mu-bases and implicit equations of rational planar curves "
      "and rational ruled surfaces"};
  app.require_subcommand(1);

  CliConfig cfg;
  struct Cmd {
    const char* name;
    const char* help;
    int arity;
    int (*run)(const CliConfig&);
  };
  const Cmd cmds[] = {
      {"pluecker", "Pluecker coordinates of a ruled surface", 4, run_pluecker},
      {"mubasis-curve", "mu-basis of a rational planar curve", 3,
       run_mubasis_curve},
      {"mubasis-surface", "mu-basis of a rational ruled surface", 4,
       run_mubasis_surface},
      {"implicitize-curve", "implicit equation of a planar curve", 3,
       run_implicitize_curve},
      {"implicitize-surface", "implicit equation of a ruled surface", 4,
       run_implicitize_surface},
      {"degrees", "degree data of a ruled surface", 4, run_degrees},
      {"verify", "check an implicit polynomial against a parametrization "
                 "(implicit first, then four coordinates)",
       5, run_verify},
  };
  int (*selected)(const CliConfig&) = nullptr;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, cfg, c.arity);
    sub->callback([&selected, &c]() { selected = c.run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return selected(cfg);
  } catch (const mubasis::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (cfg.json_output)
      std::cout << mubasis::error_json(e.what(), 0,
                                       static_cast<long long>(e.offset()))
                       .dump(2)
                << "\n";
    return 1;
  } catch (const mubasis::input_error& e) {
    std::cerr << "error"
              << (e.step() > 0 ? " (step " + std::to_string(e.step()) + ")"
                               : "")
              << ": " << e.what() << "\n";
    if (cfg.json_output)
      std::cout << mubasis::error_json(e.what(), e.step()).dump(2) << "\n";
    return 1;
  } catch (const mubasis::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
