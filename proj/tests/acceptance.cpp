// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mhdstress/algebra.hpp"
#include "mhdstress/config.hpp"
#include "mhdstress/integrator.hpp"
#include "mhdstress/verification.hpp"

using namespace mhdstress;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Drift {
  double energy = 0.0;
  double cross = 0.0;
  double momentum = 0.0;
  double helicity = 0.0;
};

Drift drift(const std::vector<InvariantRecord>& recs) {
  Drift d;
  const auto& r0 = recs.front();
  for (const auto& r : recs) {
    d.energy = std::max(d.energy, std::abs(r.energy - r0.energy) / std::abs(r0.energy));
    d.cross = std::max(d.cross, std::abs(r.cross_helicity - r0.cross_helicity) / std::abs(r0.cross_helicity));
    for (std::size_t i = 0; i < r.momentum.size(); ++i)
      d.momentum = std::max(d.momentum, std::abs(r.momentum[i] - r0.momentum[i]));
    if (r.magnetic_helicity && r0.magnetic_helicity)
      d.helicity = std::max(d.helicity, std::abs(*r.magnetic_helicity - *r0.magnetic_helicity) /
                                            std::abs(*r0.magnetic_helicity));
  }
  return d;
}

SimConfig random_run(int dim, int n, Model model, double amplitude, double dt, double t_end) {
  SimConfig c;
  c.dim = dim;
  c.n_points = n;
  c.model = model;
  c.dt = dt;
  c.t_end = t_end;
  c.sample_every = 20;
  c.ic.kind = InitialKind::random_bandlimited;
  c.ic.seed = 2024;
  c.ic.k_cap = 4;
  c.ic.amplitude = amplitude;
  // cross-helicity well away from zero so its drift is not measured against noise
  c.ic.correlation = 0.5;
  return c;
}

double state_distance(const MhdState& a, const MhdState& b) {
  const double dv = l2_norm(a.v - b.v);
  const double dB = l2_norm(a.B - b.B);
  return std::sqrt(dv * dv + dB * dB);
}

// Shared between criteria 2-4 and 9.
struct Runs2D {
  RunResult stress;
  RunResult classical;
  RunResult with_mean;
  double cross_over_energy = 0.0;
};

const Runs2D& runs_2d() {
  static const Runs2D runs = [] {
    const SimConfig s = random_run(2, 32, Model::stress, 0.1, 5e-4, 1.0);
    SimConfig c = s;
    c.model = Model::classical;
    SimConfig m = s;
    m.ic.mean_v = {0.03, -0.02};
    const RunResult rs = run(s);
    const double ratio = std::abs(rs.records.front().cross_helicity) / rs.records.front().energy;
    return Runs2D{rs, run(c), run(m), ratio};
  }();
  return runs;
}

Outcome criterion_1() {
  const TorusGrid g(2, 32);
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) worst = std::max(worst, euler_equivalence_residual(random_state(g, 4, 0.1, rng)));
  return {worst < 1e-10, "max relative difference " + fmt("%.3e", worst) + " (< 1e-10)"};
}

Outcome criterion_2() {
  const double d = drift(runs_2d().stress.records).energy;
  return {d < 1e-6, "relative energy drift " + fmt("%.3e", d) + " (< 1e-6)"};
}

Outcome criterion_3() {
  const auto& r = runs_2d();
  const double d = drift(r.stress.records).cross;
  const bool ok = d < 1e-6 && r.cross_over_energy > 0.1;
  return {ok, "relative cross-helicity drift " + fmt("%.3e", d) + " (< 1e-6), |H_c|/E = " +
                  fmt("%.3f", r.cross_over_energy) + " (> 0.1)"};
}

Outcome criterion_4() {
  const auto& recs = runs_2d().with_mean.records;
  const double d = drift(recs).momentum;
  const double p = std::abs(recs.front().momentum[0]);
  return {d < 1e-12 && p > 0.0, "max momentum drift " + fmt("%.3e", d) + " (< 1e-12), initial |P_1| = " + fmt("%.3f", p)};
}

Outcome criterion_5() {
  const auto r = run_alfven_study(AlfvenStudyOptions{});
  bool ok = r.errors.front() < 1e-8;
  std::string detail = "L2 error at dt = 1e-3: " + fmt("%.3e", r.errors.front()) + " (< 1e-8); halving ratios";
  for (double q : r.ratios) {
    ok = ok && std::abs(q - 16.0) <= 0.2 * 16.0;
    detail += " " + fmt("%.2f", q);
  }
  return {ok, detail + " (16 +- 20%)"};
}

Outcome criterion_6() {
  const TorusGrid g(2, 32);
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto s = random_state(g, 4, 0.1, rng);
    for (auto [a, b] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}})
      worst = std::max(worst, stress_tensor_residual(s, a, b));
  }
  return {worst < 1e-11, "max relative difference " + fmt("%.3e", worst) + " (< 1e-11)"};
}

std::vector<CheckResult> algebra_results() {
  static const std::vector<CheckResult> results = run_algebra_suite(AlgebraSuiteOptions{});
  return results;
}

Outcome criterion_7() {
  bool ok = true;
  std::string detail;
  for (const auto& r : algebra_results()) {
    if (r.name.rfind("invariance", 0) != 0 && r.name != "antisymmetry" && r.name != "jacobi") continue;
    ok = ok && r.passed();
    detail += (detail.empty() ? "" : ", ") + r.name + " " + fmt("%.2e", r.residual);
  }
  return {ok, detail};
}

Outcome criterion_8() {
  bool ok = true;
  std::string detail;
  int seen = 0;
  for (const auto& r : algebra_results()) {
    if (r.name.find("[X, AX]") == std::string::npos) continue;
    ++seen;
    ok = ok && r.passed();
    detail += (detail.empty() ? "" : ", ") + r.name + " " + fmt("%.2e", r.residual);
  }
  return {ok && seen == 2, detail + " over 50 elements (< 1e-10)"};
}

Outcome criterion_9() {
  const auto& r = runs_2d();
  const Drift d = drift(r.classical.records);
  const double gap = state_distance(r.stress.state, r.classical.state);
  const bool ok = d.energy < 1e-6 && d.cross < 1e-6 && gap > 1e-4;
  return {ok, "classical energy drift " + fmt("%.3e", d.energy) + ", cross-helicity drift " + fmt("%.3e", d.cross) +
                  " (< 1e-6); stress vs classical L2 distance at t = 1: " + fmt("%.3e", gap) + " (> 1e-4)"};
}

Outcome criterion_10() {
  SimConfig c = random_run(3, 16, Model::stress, 0.05, 2e-3, 0.2);
  c.ic.mean_v = {0.02, -0.01, 0.015};
  const auto res = run(c);
  const Drift d = drift(res.records);
  const bool ok = d.energy < 1e-5 && d.cross < 1e-5 && d.momentum < 1e-5 && d.helicity < 1e-5 &&
                  res.records.front().magnetic_helicity.has_value();
  return {ok, "energy " + fmt("%.2e", d.energy) + ", cross-helicity " + fmt("%.2e", d.cross) + ", momentum " +
                  fmt("%.2e", d.momentum) + ", magnetic helicity " + fmt("%.2e", d.helicity) + " (each < 1e-5)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Euler equation on g(tau) equals the stress system", criterion_1},
      {"energy conservation, stress model", criterion_2},
      {"cross-helicity conservation, stress model", criterion_3},
      {"momentum conservation", criterion_4},
      {"Alfven wave accuracy and fourth-order convergence", criterion_5},
      {"stress tensor family gives one projected force", criterion_6},
      {"invariance, antisymmetry and Jacobi of the bracket", criterion_7},
      {"first integrals of the Euler equation", criterion_8},
      {"classical limit conserves and differs from the stress model", criterion_9},
      {"3D smoke test", criterion_10},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
