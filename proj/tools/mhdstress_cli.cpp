#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "mhdstress/config.hpp"
#include "mhdstress/errors.hpp"
#include "mhdstress/integrator.hpp"
#include "mhdstress/io.hpp"
#include "mhdstress/verification.hpp"

using namespace mhdstress;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfigError = 2, kBlowUp = 3, kSuiteFailure = 4 };

std::string snapshot_name(const std::string& prefix, long step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%08ld.mhdc", step);
  return prefix + buf;
}

void emit_timeseries(const SimConfig& c, const std::vector<InvariantRecord>& records) {
  if (c.output.timeseries.empty() || c.output.timeseries == "-")
    write_timeseries(std::cout, records, c.dim);
  else
    write_timeseries(std::filesystem::path(c.output.timeseries), records, c.dim);
}

int cmd_run(const std::string& config_path, const std::string& timeseries_override) {
  SimConfig c;
  try {
    c = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  }
  if (!timeseries_override.empty()) c.output.timeseries = timeseries_override;

  const auto& prefix = c.output.snapshot_prefix;
  StepObserver observer;
  if (!prefix.empty() && c.output.snapshot_every > 0) {
    observer = [&](const MhdState& s, long step) {
      if (step % c.output.snapshot_every == 0) write_snapshot(std::filesystem::path(snapshot_name(prefix, step)), s);
    };
  }

  try {
    const RunResult r = run(c, observer);
    emit_timeseries(c, r.records);
    if (!prefix.empty()) write_snapshot(std::filesystem::path(prefix + "_final.mhdc"), r.state);
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << " (last valid t = " << e.last_valid_time() << ")\n";
    if (!e.records().empty()) emit_timeseries(c, e.records());
    return kBlowUp;
  }
}

int cmd_algebra_check(const AlgebraSuiteOptions& o) {
  bool ok = true;
  for (const auto& r : run_algebra_suite(o)) {
    std::printf("%-36s residual %.3e  tolerance %.1e  %s\n", r.name.c_str(), r.residual, r.tolerance,
                r.passed() ? "ok" : "FAILED");
    ok = ok && r.passed();
  }
  return ok ? kOk : kSuiteFailure;
}

int cmd_alfven_test(const AlfvenStudyOptions& o, double max_error, double ratio_tol) {
  const auto r = run_alfven_study(o);
  bool ok = r.errors.front() < max_error;
  std::printf("%-12s %-14s %s\n", "dt", "L2 error", "ratio");
  for (std::size_t i = 0; i < r.dts.size(); ++i) {
    if (i == 0) {
      std::printf("%-12.4e %-14.6e\n", r.dts[i], r.errors[i]);
      continue;
    }
    const double q = r.ratios[i - 1];
    ok = ok && std::abs(q - 16.0) <= ratio_tol * 16.0;
    std::printf("%-12.4e %-14.6e %.3f\n", r.dts[i], r.errors[i], q);
  }
  std::printf("%s: error < %.1e and ratios within 16 +- %.0f%%\n", ok ? "ok" : "FAILED", max_error, 100 * ratio_tol);
  return ok ? kOk : kSuiteFailure;
}

int cmd_diag(const std::string& path) {
  const MhdState s = read_snapshot(std::filesystem::path(path));
  std::cout << timeseries_header(s.grid().dim()) << "\n" << timeseries_row(measure(s)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral MHD with an asymmetric stress tensor, and checks of the g(tau) algebra"};
  app.require_subcommand(1);

  std::string config_path, timeseries;
  auto* run_cmd = app.add_subcommand("run", "Integrate the system described by a config file");
  run_cmd->add_option("config", config_path, "Config file (key = value)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--timeseries", timeseries, "Override output.timeseries ('-' for stdout)");

  AlgebraSuiteOptions alg;
  auto* alg_cmd = app.add_subcommand("algebra-check", "Run the bracket/invariant-form property suite");
  alg_cmd->add_option("--seed", alg.seed, "RNG seed")->capture_default_str();
  alg_cmd->add_option("--dim", alg.dim, "Torus dimension")->check(CLI::IsMember({2, 3}))->capture_default_str();
  alg_cmd->add_option("--n", alg.n_points, "Points per axis")->capture_default_str();
  alg_cmd->add_option("--k-cap", alg.k_cap, "Band limit of random elements")->capture_default_str();
  alg_cmd->add_option("--trials", alg.trials, "Random triples per identity")->capture_default_str();
  alg_cmd->add_option("--euler-trials", alg.euler_trials, "Random elements for the Euler first integrals")
      ->capture_default_str();
  alg_cmd->add_option("--invariance-tol", alg.invariance_tol)->capture_default_str();
  alg_cmd->add_option("--antisymmetry-tol", alg.antisymmetry_tol)->capture_default_str();
  alg_cmd->add_option("--jacobi-tol", alg.jacobi_tol)->capture_default_str();
  alg_cmd->add_option("--euler-tol", alg.euler_tol)->capture_default_str();

  AlfvenStudyOptions alf;
  std::string model_name = "stress";
  double max_error = 1e-8, ratio_tol = 0.2;
  auto* alf_cmd = app.add_subcommand("alfven-test", "Convergence study against the exact Alfven wave");
  alf_cmd->add_option("--n", alf.n_points, "Points per axis")->capture_default_str();
  alf_cmd->add_option("--model", model_name, "classical or stress")->capture_default_str();
  alf_cmd->add_option("--dt", alf.dt, "Coarsest time step")->capture_default_str();
  alf_cmd->add_option("--t-end", alf.t_end)->capture_default_str();
  alf_cmd->add_option("--levels", alf.levels, "Number of dt halvings + 1")->check(CLI::Range(2, 12))
      ->capture_default_str();
  alf_cmd->add_option("--max-error", max_error, "Bound on the coarsest-level L2 error")->capture_default_str();
  alf_cmd->add_option("--ratio-tol", ratio_tol, "Relative tolerance on the halving ratio 16")->capture_default_str();

  std::string snapshot;
  auto* diag_cmd = app.add_subcommand("diag", "Recompute diagnostics from a snapshot");
  diag_cmd->add_option("snapshot", snapshot, "MHDC snapshot file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(config_path, timeseries);
    if (*alg_cmd) return cmd_algebra_check(alg);
    if (*alf_cmd) {
      alf.model = parse_model(model_name);
      return cmd_alfven_test(alf, max_error, ratio_tol);
    }
    if (*diag_cmd) return cmd_diag(snapshot);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
