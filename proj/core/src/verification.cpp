#include "mhdstress/verification.hpp"

#include <algorithm>
#include <cmath>

#include "mhdstress/diagnostics.hpp"
#include "mhdstress/initial_conditions.hpp"
#include "mhdstress/integrator.hpp"

namespace mhdstress {
namespace {

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : num; }

double pair_norm(const SpectralField& a, const SpectralField& b) {
  return std::sqrt(inner_product(a, a) + inner_product(b, b));
}

AlgebraElement vector_only(const AlgebraElement& x) { return AlgebraElement(x.vf, SpectralField(x.grid())); }
AlgebraElement form_only(const AlgebraElement& x) { return AlgebraElement(SpectralField(x.grid()), x.form); }

}  // namespace

double invariance_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  const AlgebraElement xy = full_bracket(x, y);
  const AlgebraElement yz = full_bracket(y, z);
  const double lhs = invariant_form(xy, z);
  const double rhs = invariant_form(x, yz);
  return safe_ratio(std::abs(lhs - rhs), norm(xy) * norm(z) + norm(x) * norm(yz));
}

double antisymmetry_residual(const AlgebraElement& x, const AlgebraElement& y) {
  const AlgebraElement xy = full_bracket(x, y);
  const AlgebraElement yx = full_bracket(y, x);
  return safe_ratio(norm(xy + yx), norm(xy) + norm(yx));
}

double jacobi_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  const AlgebraElement a = full_bracket(x, full_bracket(y, z));
  const AlgebraElement b = full_bracket(y, full_bracket(z, x));
  const AlgebraElement c = full_bracket(z, full_bracket(x, y));
  return safe_ratio(norm(a + b + c), norm(a) + norm(b) + norm(c));
}

std::pair<double, double> euler_first_integral_residuals(const AlgebraElement& x) {
  const AlgebraElement ax = inertia_apply(x);
  const AlgebraElement rhs = euler_rhs(x);
  const double r = norm(rhs);
  return {safe_ratio(std::abs(invariant_form(ax, rhs)), norm(ax) * r),
          safe_ratio(std::abs(invariant_form(x, rhs)), norm(x) * r)};
}

double euler_equivalence_residual(const MhdState& s) {
  const AlgebraElement x(s.B, s.v);
  const AlgebraElement e = euler_rhs(x);
  const StateRate r = mhd_rhs_stress(s);
  return safe_ratio(pair_norm(e.vf - r.dB, e.form - r.dv), pair_norm(r.dB, r.dv));
}

double stress_tensor_residual(const MhdState& s, double alpha, double beta) {
  const SpectralField a = leray_project(tensor_divergence(stress_tensor_field(s, alpha, beta)));
  const SpectralField b = leray_project(stress_term(s));
  return safe_ratio(l2_norm(a - b), l2_norm(b));
}

double stress_form_residual(const MhdState& s) {
  const SpectralField a = leray_project(stress_term(s));
  const SpectralField b = leray_project(stress_term_alt(s));
  return safe_ratio(l2_norm(a - b), l2_norm(a));
}

AlgebraElement random_element(const TorusGrid& grid, int k_cap, std::mt19937_64& rng) {
  SpectralField vf = random_solenoidal_field(grid, k_cap, 1.0, rng);
  SpectralField form = random_solenoidal_field(grid, k_cap, 1.0, rng);
  for (int i = 0; i < grid.dim(); ++i) {
    vf.component(i)[0] = 0.5 * uniform_symmetric(rng);
    form.component(i)[0] = 0.5 * uniform_symmetric(rng);
  }
  return AlgebraElement(std::move(vf), std::move(form));
}

MhdState random_state(const TorusGrid& grid, int k_cap, double amplitude, std::mt19937_64& rng) {
  SpectralField v = random_solenoidal_field(grid, k_cap, amplitude, rng);
  SpectralField B = random_solenoidal_field(grid, k_cap, amplitude, rng);
  return MhdState(std::move(v), std::move(B));
}

std::vector<CheckResult> run_algebra_suite(const AlgebraSuiteOptions& o) {
  const TorusGrid grid(o.dim, o.n_points);
  std::mt19937_64 rng(o.seed);

  double inv_i = 0.0, inv_ii = 0.0, inv_iii = 0.0, inv_full = 0.0;
  double anti = 0.0, jac = 0.0, inertia = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    const AlgebraElement x = random_element(grid, o.k_cap, rng);
    const AlgebraElement y = random_element(grid, o.k_cap, rng);
    const AlgebraElement z = random_element(grid, o.k_cap, rng);
    inv_i = std::max(inv_i, invariance_residual(vector_only(x), vector_only(y), form_only(z)));
    inv_ii = std::max(inv_ii, invariance_residual(vector_only(x), form_only(y), vector_only(z)));
    inv_iii = std::max(inv_iii, invariance_residual(vector_only(x), vector_only(y), vector_only(z)));
    inv_full = std::max(inv_full, invariance_residual(x, y, z));
    anti = std::max(anti, antisymmetry_residual(x, y));
    jac = std::max(jac, jacobi_residual(x, y, z));
    const double lhs = invariant_form(inertia_apply(x), inertia_apply(y));
    const double rhs = invariant_form(x, y);
    inertia = std::max(inertia, safe_ratio(std::abs(lhs - rhs), norm(x) * norm(y)));
  }

  double e_energy = 0.0, e_cross = 0.0;
  for (int t = 0; t < o.euler_trials; ++t) {
    const auto [a, b] = euler_first_integral_residuals(random_element(grid, o.k_cap, rng));
    e_energy = std::max(e_energy, a);
    e_cross = std::max(e_cross, b);
  }

  return {
      {"invariance (i) vf,vf,form", inv_i, o.invariance_tol},
      {"invariance (ii) vf,form,vf", inv_ii, o.invariance_tol},
      {"invariance (iii) vf,vf,vf", inv_iii, o.invariance_tol},
      {"invariance, general elements", inv_full, o.invariance_tol},
      {"antisymmetry", anti, o.antisymmetry_tol},
      {"jacobi", jac, o.jacobi_tol},
      {"inertia preserves invariant form", inertia, o.invariance_tol},
      {"(AX | [X, AX]) = 0", e_energy, o.euler_tol},
      {"(X | [X, AX]) = 0", e_cross, o.euler_tol},
  };
}

AlfvenStudyResult run_alfven_study(const AlfvenStudyOptions& o) {
  const TorusGrid grid(o.dim, o.n_points);
  const SpectralField w = field_from_modes(grid, o.w_modes, 'w');
  const MhdState initial = alfven_exact(w, o.B0, 0.0);
  const MhdState exact = alfven_exact(w, o.B0, o.t_end);

  AlfvenStudyResult res;
  double dt = o.dt;
  for (int level = 0; level < o.levels; ++level, dt *= 0.5) {
    const StepControl control{dt, o.t_end, 1 << 30, 1.0};
    const RunResult run = integrate(initial, o.model, control);
    res.dts.push_back(dt);
    res.errors.push_back(pair_norm(run.state.v - exact.v, run.state.B - exact.B));
  }
  for (std::size_t i = 0; i + 1 < res.errors.size(); ++i)
    res.ratios.push_back(safe_ratio(res.errors[i], res.errors[i + 1]));
  return res;
}

}  // namespace mhdstress
