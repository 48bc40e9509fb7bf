#include "mhdstress/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mhdstress/errors.hpp"
#include "mhdstress/initial_conditions.hpp"

namespace mhdstress {
namespace {

// Energy growth factor treated as blow-up; the continuous system conserves energy.
constexpr double kEnergySpike = 1e3;

MhdState advance(const MhdState& s, const StateRate& r, double h) {
  MhdState out = s;
  out.v.add_scaled(h, r.dv);
  out.B.add_scaled(h, r.dB);
  out.t = s.t + h;
  return out;
}

}  // namespace

double max_stable_dt(const MhdState& s, Model model) {
  const double k_max = s.grid().dealias_cutoff();
  const double w_adv = k_max * (max_magnitude(s.v) + max_magnitude(s.B));
  const double w_disp = model == Model::stress ? k_max * k_max * k_max : 0.0;
  const double w = std::max(w_adv, w_disp);
  return w > 0.0 ? 2.8 / w : std::numeric_limits<double>::infinity();
}

MhdState rk4_step(const MhdState& s, double dt, Model model) {
  const StateRate k1 = mhd_rhs(s, model);
  const StateRate k2 = mhd_rhs(advance(s, k1, 0.5 * dt), model);
  const StateRate k3 = mhd_rhs(advance(s, k2, 0.5 * dt), model);
  const StateRate k4 = mhd_rhs(advance(s, k3, dt), model);

  SpectralField v = s.v;
  SpectralField B = s.B;
  const double w1 = dt / 6.0;
  const double w2 = dt / 3.0;
  v.add_scaled(w1, k1.dv).add_scaled(w2, k2.dv).add_scaled(w2, k3.dv).add_scaled(w1, k4.dv);
  B.add_scaled(w1, k1.dB).add_scaled(w2, k2.dB).add_scaled(w2, k3.dB).add_scaled(w1, k4.dB);

  MhdState out(leray_project(dealias(v)), leray_project(dealias(B)), s.t + dt);
  if (!out.v.all_finite() || !out.B.all_finite())
    throw BlowUpError("non-finite state after step from t = " + std::to_string(s.t), s.t);
  return out;
}

RunResult integrate(const MhdState& initial, Model model, const StepControl& control, const StepObserver& observer) {
  if (!(control.dt > 0.0)) throw ConfigError("dt must be positive");
  if (control.sample_every < 1) throw ConfigError("sample_every must be >= 1");
  if (!initial.v.all_finite() || !initial.B.all_finite())
    throw BlowUpError("non-finite initial state", initial.t);
  const double dt_max = max_stable_dt(initial, model);
  if (control.dt > control.stability_factor * dt_max)
    throw ConfigError("dt = " + std::to_string(control.dt) + " exceeds the stability bound " +
                      std::to_string(control.stability_factor * dt_max));

  const double t0 = initial.t;
  const double span = control.t_end - t0;
  const long n_steps = span > 0.0 ? static_cast<long>(std::ceil(span / control.dt - 1e-9)) : 0;

  RunResult result{initial, {}};
  result.records.push_back(measure(initial));
  const double e0 = result.records.front().energy;

  for (long step = 1; step <= n_steps; ++step) {
    const double t_next = step == n_steps ? control.t_end : t0 + static_cast<double>(step) * control.dt;
    try {
      result.state = rk4_step(result.state, t_next - result.state.t, model);
    } catch (const BlowUpError& e) {
      throw BlowUpError(e.what(), e.last_valid_time(), std::move(result.records));
    }
    result.state.t = t_next;
    if (observer) observer(result.state, step);

    if (step % control.sample_every == 0 || step == n_steps) {
      InvariantRecord rec = measure(result.state);
      const bool spike = e0 > 0.0 && rec.energy > kEnergySpike * e0;
      const bool bad = !std::isfinite(rec.energy) || !std::isfinite(rec.cross_helicity);
      result.records.push_back(std::move(rec));
      if (spike || bad) {
        const double t_valid = result.records.size() >= 2 ? result.records[result.records.size() - 2].t : t0;
        throw BlowUpError("energy spike at t = " + std::to_string(t_next), t_valid, std::move(result.records));
      }
    }
  }
  return result;
}

RunResult run(const SimConfig& config, const StepObserver& observer) {
  validate(config);
  const StepControl control{config.dt, config.t_end, config.sample_every, config.stability_factor};
  return integrate(make_initial_state(config), config.model, control, observer);
}

}  // namespace mhdstress
