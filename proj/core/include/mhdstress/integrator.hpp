#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "mhdstress/config.hpp"
#include "mhdstress/diagnostics.hpp"
#include "mhdstress/dynamics.hpp"

namespace mhdstress {

struct StepControl {
  double dt = 1e-3;
  double t_end = 1.0;
  int sample_every = 10;
  double stability_factor = 1.0;
};

/// Non-finite state or runaway energy. Carries the diagnostics gathered
/// before the failure.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double last_valid_time, std::vector<InvariantRecord> records = {})
      : std::runtime_error(what), last_valid_time_(last_valid_time), records_(std::move(records)) {}

  double last_valid_time() const { return last_valid_time_; }
  const std::vector<InvariantRecord>& records() const { return records_; }

 private:
  double last_valid_time_;
  std::vector<InvariantRecord> records_;
};

/// 2.8 / max(w_adv, w_disp) with w_adv = k_max (max|v| + max|B|) and, for
/// the stress model, w_disp = k_max^3; k_max is the dealias cutoff.
double max_stable_dt(const MhdState& s, Model model);

/// Classical four-stage Runge-Kutta step; the result is re-projected and
/// dealiased. Throws BlowUpError on non-finite output.
MhdState rk4_step(const MhdState& s, double dt, Model model);

struct RunResult {
  MhdState state;
  std::vector<InvariantRecord> records;
};

/// Called after every accepted step with the new state and step index.
using StepObserver = std::function<void(const MhdState&, long)>;

/// Integrates from s.t to control.t_end, recording diagnostics every
/// sample_every steps plus the initial and final states. The last step is
/// shortened to land on t_end. Throws ConfigError if dt violates the
/// stability bound, BlowUpError (with partial records) on blow-up.
RunResult integrate(const MhdState& initial, Model model, const StepControl& control,
                    const StepObserver& observer = {});

/// make_initial_state + integrate for a config.
RunResult run(const SimConfig& config, const StepObserver& observer = {});

}  // namespace mhdstress
