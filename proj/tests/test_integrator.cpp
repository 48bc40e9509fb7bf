#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "mhdstress/errors.hpp"
#include "mhdstress/integrator.hpp"
#include "mhdstress/verification.hpp"
#include "oracles.hpp"

using namespace mhdstress;

namespace {

const TorusGrid kGrid(2, 16);

double zero_fn(double, double, double) { return 0.0; }

SpectralField cos_x2_e1() { return oracle::field(kGrid, {[](double, double y, double) { return std::cos(y); }, zero_fn}); }

double distance(const MhdState& a, const MhdState& b) {
  SpectralField dv = a.v, dB = a.B;
  dv -= b.v;
  dB -= b.B;
  return std::sqrt(std::pow(l2_norm(dv), 2) + std::pow(l2_norm(dB), 2));
}

}  // namespace

TEST_CASE("max_stable_dt") {
  const TorusGrid g(2, 32);
  std::mt19937_64 rng(41);
  const auto s = random_state(g, 4, 0.1, rng);
  // cutoff 10: dispersion dominates the stress model
  CHECK(max_stable_dt(s, Model::stress) == doctest::Approx(2.8 / 1000.0).epsilon(1e-15));
  CHECK(max_stable_dt(s, Model::classical) == doctest::Approx(2.8 / (10.0 * 0.2)).epsilon(1e-12));
  CHECK(std::isinf(max_stable_dt(MhdState(g), Model::classical)));
}

TEST_CASE("rk4_step") {
  const MhdState steady(cos_x2_e1(), cos_x2_e1());
  const auto next = rk4_step(steady, 0.01, Model::stress);
  CHECK(oracle::max_diff(next.v, steady.v) < 1e-13);
  CHECK(oracle::max_diff(next.B, steady.B) < 1e-13);
  CHECK(next.t == doctest::Approx(0.01));

  const auto z = rk4_step(MhdState(kGrid), 0.01, Model::stress);
  CHECK(oracle::max_abs(z.v) == 0.0);
  CHECK(oracle::max_abs(z.B) == 0.0);

  SUBCASE("one Alfven step matches the phase rotation") {
    const auto w = oracle::field(kGrid, {[](double, double y, double) { return std::sin(y); }, zero_fn});
    const std::vector<double> B0 = {0.0, 1.0};
    for (Model model : {Model::classical, Model::stress}) {
      const auto got = rk4_step(alfven_exact(w, B0, 0.0), 1e-2, model);
      CHECK(distance(got, alfven_exact(w, B0, 1e-2)) < 1e-10);
    }
  }

  SUBCASE("non-finite state") {
    MhdState bad(kGrid);
    bad.v.component(0)[1] = std::numeric_limits<double>::quiet_NaN();
    bad.t = 0.25;
    try {
      rk4_step(bad, 0.01, Model::classical);
      FAIL("expected BlowUpError");
    } catch (const BlowUpError& e) {
      CHECK(e.last_valid_time() == 0.25);
    } catch (const ContractViolation&) {
      FAIL("NaN input reported as a contract violation");
    }
  }
}

TEST_CASE("fourth-order convergence on the Alfven wave") {
  // dt large enough that truncation error dominates roundoff
  AlfvenStudyOptions o;
  o.n_points = 16;
  o.w_modes = {ModeSpec{'w', 1, {0, 4}, {0.0, -0.05}}};
  o.dt = 0.02;
  o.t_end = 1.0;
  o.levels = 3;
  for (Model model : {Model::classical, Model::stress}) {
    o.model = model;
    const auto r = run_alfven_study(o);
    REQUIRE(r.ratios.size() == 2);
    for (double ratio : r.ratios) {
      INFO("model ", to_string(model), " ratio ", ratio);
      CHECK(ratio == doctest::Approx(16.0).epsilon(0.2));
    }
    CHECK(r.errors.back() < r.errors.front());
  }
}

TEST_CASE("integrate") {
  const MhdState steady(cos_x2_e1(), cos_x2_e1());

  SUBCASE("t_end = 0 returns the initial state and one record") {
    const auto r = integrate(steady, Model::stress, StepControl{0.01, 0.0, 10, 1.0});
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].t == 0.0);
    CHECK(r.state.v == steady.v);
    CHECK(r.state.B == steady.B);
  }

  SUBCASE("sampling cadence and landing on t_end") {
    long calls = 0;
    const auto r = integrate(steady, Model::classical, StepControl{0.1, 1.0, 3, 1.0},
                             [&](const MhdState&, long step) { calls = step; });
    CHECK(calls == 10);
    REQUIRE(r.records.size() == 5);
    const double expect_t[] = {0.0, 0.3, 0.6, 0.9, 1.0};
    for (std::size_t i = 0; i < 5; ++i) CHECK(r.records[i].t == doctest::Approx(expect_t[i]).epsilon(1e-14));
    CHECK(r.records.back().t == 1.0);
    CHECK(r.state.t == 1.0);
  }

  SUBCASE("uneven final step") {
    const auto r = integrate(steady, Model::stress, StepControl{0.015, 0.1, 1, 1.0});
    CHECK(r.records.size() == 8);  // t = 0 and 7 steps, the last one shortened
    CHECK(r.state.t == 0.1);
  }

  SUBCASE("steady aligned state stays put") {
    const auto r = integrate(steady, Model::stress, StepControl{0.01, 1.0, 10, 1.0});
    for (const auto& rec : r.records) {
      CHECK(std::abs(rec.energy - r.records[0].energy) < 1e-12);
      CHECK(std::abs(rec.cross_helicity - r.records[0].cross_helicity) < 1e-12);
    }
  }

  SUBCASE("stability bound") {
    const TorusGrid g(2, 32);
    std::mt19937_64 rng(42);
    const auto s = random_state(g, 4, 0.1, rng);
    CHECK_THROWS_AS(integrate(s, Model::stress, StepControl{0.01, 1.0, 10, 1.0}), ConfigError);
    CHECK_THROWS_AS(integrate(s, Model::stress, StepControl{2.5e-3, 1.0, 10, 0.5}), ConfigError);
    CHECK_NOTHROW(integrate(s, Model::classical, StepControl{0.01, 0.02, 10, 1.0}));
  }

  SUBCASE("non-finite initial state") {
    MhdState bad = steady;
    bad.v.component(0)[1] = std::numeric_limits<double>::infinity();
    try {
      integrate(bad, Model::classical, StepControl{0.01, 1.0, 1, 1.0});
      FAIL("expected BlowUpError");
    } catch (const BlowUpError& e) {
      CHECK(e.last_valid_time() == 0.0);
      CHECK(e.records().empty());
    }
  }
}

TEST_CASE("conservation along a short stress run") {
  const TorusGrid g(2, 32);
  std::mt19937_64 rng(43);
  auto s = random_state(g, 4, 0.1, rng);
  s.v.component(0)[0] = 0.05;
  const auto r = integrate(s, Model::stress, StepControl{1e-3, 0.1, 20, 1.0});
  const auto& first = r.records.front();
  for (const auto& rec : r.records) {
    CHECK(std::abs(rec.energy - first.energy) < 1e-9 * first.energy);
    CHECK(std::abs(rec.cross_helicity - first.cross_helicity) < 1e-9 * first.energy);
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(rec.momentum[i] - first.momentum[i]) < 1e-12);
    CHECK(rec.max_div_v < 1e-12);
    CHECK(rec.max_div_B < 1e-12);
  }
}

TEST_CASE("determinism") {
  SimConfig c;
  c.dim = 2;
  c.n_points = 16;
  c.model = Model::stress;
  c.dt = 5e-3;
  c.t_end = 0.05;
  c.sample_every = 2;
  c.ic.seed = 99;
  c.ic.k_cap = 3;
  const auto a = run(c);
  const auto b = run(c);
  CHECK(a.records == b.records);
  CHECK(a.state.v == b.state.v);
  CHECK(a.state.B == b.state.B);
}
