#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mhdstress/algebra.hpp"
#include "mhdstress/config.hpp"
#include "mhdstress/dynamics.hpp"

namespace mhdstress {

// Residuals below are normalized by the Cauchy-Schwarz bound (or the sum
// of term norms) of the quantities that should cancel, so they are
// dimensionless and resolution independent.

/// |([X,Y]|Z) - (X|[Y,Z])| / (|[X,Y]| |Z| + |X| |[Y,Z]|)
double invariance_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

/// |[X,Y] + [Y,X]| / (|[X,Y]| + |[Y,X]|)
double antisymmetry_residual(const AlgebraElement& x, const AlgebraElement& y);

/// |[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]| / (sum of the three term norms)
double jacobi_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

/// {|(AX|[X,AX])|, |(X|[X,AX])|}, each divided by the matching |.| |[X,AX]|.
std::pair<double, double> euler_first_integral_residuals(const AlgebraElement& x);

/// Relative gap between euler_rhs(B d + v dx) and mhd_rhs_stress(v, B).
double euler_equivalence_residual(const MhdState& s);

/// Relative gap between P div T(alpha, beta) and P stress_term.
double stress_tensor_residual(const MhdState& s, double alpha, double beta);

/// Relative gap between P stress_term and P stress_term_alt.
double stress_form_residual(const MhdState& s);

/// Random algebra element with both parts band-limited to k_cap, unit
/// max-amplitude, and a random mean in each part.
AlgebraElement random_element(const TorusGrid& grid, int k_cap, std::mt19937_64& rng);

/// Random divergence-free state, zero means, max|v| = max|B| = amplitude.
MhdState random_state(const TorusGrid& grid, int k_cap, double amplitude, std::mt19937_64& rng);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual < tolerance; }
};

struct AlgebraSuiteOptions {
  std::uint64_t seed = 1;
  int dim = 2;
  int n_points = 16;
  /// 2 * k_cap <= dealias cutoff keeps nested brackets free of truncation.
  int k_cap = 2;
  int trials = 5;
  int euler_trials = 50;
  double invariance_tol = 1e-11;
  double antisymmetry_tol = 1e-10;
  double jacobi_tol = 1e-10;
  double euler_tol = 1e-10;
};

/// Invariance (three case patterns), antisymmetry, Jacobi, inertia
/// form-preservation and the two Euler first-integral identities; each
/// result is the worst residual over the seeded trials.
std::vector<CheckResult> run_algebra_suite(const AlgebraSuiteOptions& options);

struct AlfvenStudyOptions {
  int dim = 2;
  int n_points = 32;
  Model model = Model::stress;
  std::vector<double> B0 = {0.0, 1.0};
  /// Profile w; default 0.1 sin(x2) e1.
  std::vector<ModeSpec> w_modes = {ModeSpec{'w', 1, {0, 1}, {0.0, -0.05}}};
  double t_end = 1.0;
  double dt = 1e-3;
  /// dt, dt/2, dt/4, ...
  int levels = 3;
};

struct AlfvenStudyResult {
  std::vector<double> dts;
  std::vector<double> errors;  // L2 distance to alfven_exact at t_end
  std::vector<double> ratios;  // errors[i] / errors[i + 1]
};

AlfvenStudyResult run_alfven_study(const AlfvenStudyOptions& options);

}  // namespace mhdstress
