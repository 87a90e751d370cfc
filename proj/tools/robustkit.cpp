// Copyright 2026 The robustkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// robustkit CLI: Schmidt analysis, pure-state robustness, the Gershgorin
// mixer construction, mixture verification, the oracle search, and the
// self-test suite. Reports are deterministic JSON on stdout; diagnostics go
// to stderr. Exit codes: 0 success, 1 self-test failure, 2 parse/validation
// error, 3 unsupported input.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "robustkit/oracle_search.hpp"
#include "robustkit/robustness.hpp"
#include "robustkit/selftest.hpp"
#include "robustkit/state_io.hpp"

namespace {

using nlohmann::json;
using namespace robustkit;

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUnsupported = 3;

json input_echo(const std::string& path, const LoadedState& state) {
  return json{{"path", path},
              {"digest", state.digest},
              {"kind", state.kind},
              {"n", state.n}};
}

void emit(json report, const Tolerances& tol) {
  report["tolerances"] = tolerances_to_json(tol);
  std::cout << dump_json(report);
}

/// Pure-state view of an input: kets pass through; rank-1 densities are
/// reduced to their top eigenvector.
std::optional<Ket> pure_state_of(const LoadedState& state,
                                 const Tolerances& tol) {
  if (state.ket) return *state.ket;
  const DensityMatrix rho = *state.density;
  if (rho.purity() < 1.0 - 1e-9) return std::nullopt;
  const EigenSystem eig = hermitian_eigen(rho.mat(), tol.hermitian);
  std::vector<cplx> top = eig.eigenvector(rho.dim() - 1);
  double nrm = 0.0;
  for (const cplx& z : top) nrm += std::norm(z);
  nrm = std::sqrt(nrm);
  for (cplx& z : top) z /= nrm;
  return Ket(state.n, std::move(top), tol.ket_norm);
}

int cmd_schmidt(const std::string& in, const Tolerances& tol) {
  const LoadedState state = read_state_file(in, tol);
  if (!state.ket)
    throw unsupported_error("schmidt requires a ket input");
  const SchmidtDecomposition sd = schmidt(*state.ket, tol);
  json report{{"command", "schmidt"},
              {"input", input_echo(in, state)},
              {"coeffs", sd.coeffs},
              {"schmidt_rank", sd.rank},
              {"basis_a", matrix_to_json(sd.basis_a)},
              {"basis_b", matrix_to_json(sd.basis_b)}};
  emit(report, tol);
  return kExitOk;
}

int cmd_robustness(const std::string& in, const Tolerances& tol) {
  const LoadedState state = read_state_file(in, tol);
  const std::optional<Ket> psi = pure_state_of(state, tol);
  if (!psi) throw unsupported_error("mixed-state R_g unsupported");
  const SchmidtDecomposition sd = schmidt(*psi, tol);
  const RobustnessReport rep = robustness_pure(sd.coeffs);
  json report{{"command", "robustness"},
              {"input", input_echo(in, state)},
              {"R_s", rep.r_s},
              {"R_g", rep.r_g},
              {"O_s", rep.o_s},
              {"O_g", rep.o_g},
              {"schmidt_coeffs", rep.schmidt_coeffs}};
  emit(report, tol);
  return kExitOk;
}

int cmd_mixer(const std::string& in, const std::string& out_prefix,
              const Tolerances& tol) {
  const LoadedState state = read_state_file(in, tol);
  if (!state.ket) throw unsupported_error("mixer requires a ket input");
  const SchmidtDecomposition input_sd = schmidt(*state.ket, tol);
  if (input_sd.rank < 2)
    throw unsupported_error("mixer: product state has no mixer (a = 1)");

  // The construction lives in the canonical (Schmidt) frame; the bases in
  // the report map it back to the input frame.
  const SchmidtDecomposition sd = canonical_schmidt(input_sd.coeffs, tol);
  const MixerReport mixer = gershgorin_mixer(sd, tol);

  const std::string mixer_path = out_prefix + ".mixer.json";
  const std::string mixture_path = out_prefix + ".mixture.json";
  write_state_file(mixer_path, density_to_json(mixer.mixer));
  write_state_file(mixture_path, density_to_json(mixer.mixture));

  json report{{"command", "mixer"},
              {"input", input_echo(in, state)},
              {"bound_a", mixer.bound_a},
              {"mixer_is_ppt", mixer.mixer_is_ppt},
              {"mixture_is_ppt", mixer.mixture_is_ppt},
              {"mixer_pt_min_eigenvalue", pt_min_eigenvalue(mixer.mixer)},
              {"schmidt_coeffs", sd.coeffs},
              {"schmidt_basis_a", matrix_to_json(input_sd.basis_a)},
              {"schmidt_basis_b", matrix_to_json(input_sd.basis_b)},
              {"mixer_file", mixer_path},
              {"mixture_file", mixture_path}};
  emit(report, tol);
  return kExitOk;
}

int cmd_verify(const std::string& state_path, const std::string& mixer_path,
               double a, const Tolerances& tol) {
  if (a < 0.0 || a > 1.0)
    throw validation_error("verify: a must lie in [0, 1]");
  const LoadedState state = read_state_file(state_path, tol);
  const LoadedState mixer_state = read_state_file(mixer_path, tol);
  const DensityMatrix rho = as_density(state);
  const DensityMatrix rho_m = as_density(mixer_state);
  if (rho.local_dim() != rho_m.local_dim())
    throw validation_error("verify: state and mixer dimensions differ");

  const DensityMatrix mixture = DensityMatrix::unchecked(
      linear_combination(a, rho.mat(), 1.0 - a, rho_m.mat()),
      rho.local_dim());
  const double min_eig = pt_min_eigenvalue(mixture);

  json report{{"command", "verify"},
              {"input", input_echo(state_path, state)},
              {"mixer", input_echo(mixer_path, mixer_state)},
              {"a", a},
              {"mixture_is_ppt", min_eig >= -tol.ppt},
              {"mixture_pt_min_eigenvalue", min_eig},
              {"mixer_is_ppt", is_ppt(rho_m, tol.ppt)}};

  // The witness bound applies to pure states, evaluated in their canonical
  // frame; the mixer is rotated along.
  if (const std::optional<Ket> psi = pure_state_of(state, tol)) {
    const SchmidtDecomposition sd = schmidt(*psi, tol);
    const ComplexMatrix u = tensor(sd.basis_a, sd.basis_b);
    const DensityMatrix rotated = DensityMatrix::unchecked(
        u.dagger() * rho_m.mat() * u, rho.local_dim());
    report["witness_bound_a"] =
        witness_bound_a(canonical_schmidt(sd.coeffs, tol), rotated, tol);
  } else {
    report["witness_bound_a"] = nullptr;
  }
  emit(report, tol);
  return kExitOk;
}

int cmd_estimate(const std::string& in, int iters, std::uint64_t seed,
                 bool no_seed, const Tolerances& tol) {
  const LoadedState state = read_state_file(in, tol);
  const DensityMatrix rho = as_density(state);
  if (rho.local_dim() > 3)
    throw unsupported_error("estimate: n > 3 not supported");

  SearchConfig cfg;
  cfg.iterations = iters;
  cfg.seed = seed;
  cfg.include_gershgorin_seed = !no_seed;
  const SearchResult res = estimate_O_g(rho, cfg, tol);

  json trace = json::array();
  for (const auto& [it, a] : res.trace) trace.push_back(json::array({it, a}));
  json report{{"command", "estimate"},
              {"input", input_echo(in, state)},
              {"iterations", iters},
              {"seed", seed},
              {"gershgorin_seed", !no_seed},
              {"best_a", res.best_a},
              {"R_g_estimate", 1.0 / res.best_a - 1.0},
              {"max_examined_a", res.max_examined_a},
              {"ppt_relaxation", res.ppt_relaxation},
              {"trace", trace}};
  emit(report, tol);
  return kExitOk;
}

int cmd_selftest(int max_n, int trials, std::uint64_t seed, bool corrupt_pt,
                 const Tolerances& tol) {
  SelftestConfig cfg;
  cfg.max_n = max_n;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.corrupt_pt = corrupt_pt;
  cfg.tol = tol;
  const SelftestReport rep = run_selftest(cfg);

  json suites = json::array();
  for (const SuiteResult& s : rep.suites) {
    suites.push_back(json{{"name", s.name},
                          {"checks", s.checks},
                          {"failures", s.failures}});
    std::cerr << (s.failures == 0 ? "[PASS] " : "[FAIL] ") << s.name << " ("
              << s.checks << " checks, " << s.failures << " failures)\n";
  }
  json report{{"command", "selftest"},
              {"max_n", max_n},
              {"trials", trials},
              {"seed", seed},
              {"suites", suites},
              {"passed", rep.passed()}};
  emit(report, tol);
  return rep.passed() ? kExitOk : kExitSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robustness of entanglement toolkit"};
  app.require_subcommand(1);

  std::optional<std::string> tol_file;
  app.add_option("--tol-file", tol_file,
                 "JSON file of tolerance overrides (or set ROBUSTKIT_TOL)");

  std::string in_path, out_prefix, mixer_path;
  double weight_a = 0.0;
  int iters = 2000;
  int trials = 50;
  int max_n = 4;
  std::uint64_t seed = 0;
  bool no_seed = false;
  bool corrupt_pt = false;

  CLI::App* schmidt_cmd =
      app.add_subcommand("schmidt", "Schmidt coefficients, bases, rank");
  schmidt_cmd->add_option("input", in_path, "ket state file")->required();

  CLI::App* robustness_cmd = app.add_subcommand(
      "robustness", "closed-form pure-state robustness R and O");
  robustness_cmd->add_option("input", in_path, "ket state file")->required();

  CLI::App* mixer_cmd = app.add_subcommand(
      "mixer", "Gershgorin mixer construction; writes mixer and mixture");
  mixer_cmd->add_option("input", in_path, "entangled ket state file")
      ->required();
  mixer_cmd->add_option("output", out_prefix, "output path prefix")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check a*rho + (1-a)*rho_M for PPT, report witness bound");
  verify_cmd->add_option("state", in_path, "state file")->required();
  verify_cmd->add_option("mixer", mixer_path, "mixer state file")->required();
  verify_cmd->add_option("a", weight_a, "mixing weight in [0, 1]")
      ->required();

  CLI::App* estimate_cmd =
      app.add_subcommand("estimate", "oracle search for the optimal weight");
  estimate_cmd->add_option("input", in_path, "state file (n <= 3)")
      ->required();
  estimate_cmd->add_option("--iters", iters, "hill-climb iterations");
  estimate_cmd->add_option("--seed", seed, "search seed");
  estimate_cmd->add_flag("--no-gershgorin-seed", no_seed,
                         "disable the analytic seed for pure inputs");

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the invariant suites");
  selftest_cmd->add_option("--n", max_n, "largest local dimension (2..8)");
  selftest_cmd->add_option("--trials", trials, "samples per suite");
  selftest_cmd->add_option("--seed", seed, "suite seed");
  selftest_cmd
      ->add_flag("--inject-pt-corruption", corrupt_pt,
                 "negative control: corrupt the partial transpose")
      ->group("");  // test hook, hidden from help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    const Tolerances tol = load_tolerances(tol_file);
    if (schmidt_cmd->parsed()) return cmd_schmidt(in_path, tol);
    if (robustness_cmd->parsed()) return cmd_robustness(in_path, tol);
    if (mixer_cmd->parsed()) return cmd_mixer(in_path, out_prefix, tol);
    if (verify_cmd->parsed())
      return cmd_verify(in_path, mixer_path, weight_a, tol);
    if (estimate_cmd->parsed())
      return cmd_estimate(in_path, iters, seed, no_seed, tol);
    if (selftest_cmd->parsed())
      return cmd_selftest(max_n, trials, seed, corrupt_pt, tol);
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
