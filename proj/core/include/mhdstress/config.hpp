#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mhdstress/dynamics.hpp"

namespace mhdstress {

enum class InitialKind { random_bandlimited, alfven, aligned_steady, explicit_modes };

/// One Fourier mode of an explicit initial field. The conjugate mode -k is
/// filled in automatically so the field stays real.
struct ModeSpec {
  char field = 'v';  // 'v', 'B', or 'w' (Alfven profile)
  int component = 1;  // 1-based
  std::vector<int> k;
  std::complex<double> coeff;
};

struct InitialCondition {
  InitialKind kind = InitialKind::random_bandlimited;
  std::uint64_t seed = 1;
  int k_cap = 4;
  double amplitude = 0.1;
  /// Random fields only: B is blended towards v by this weight in [0, 1].
  double correlation = 0.0;
  /// Random fields only: uniform velocity added after normalization.
  std::vector<double> mean_v;
  /// Alfven only: background field.
  std::vector<double> B0;
  std::vector<ModeSpec> modes;
};

struct OutputSpec {
  std::string timeseries;
  std::string snapshot_prefix;
  int snapshot_every = 0;  // steps; 0 disables periodic snapshots
};

struct SimConfig {
  int dim = 2;
  int n_points = 32;
  Model model = Model::stress;
  double alpha = 1.0;
  double beta = 0.0;
  double dt = 1e-3;
  double t_end = 1.0;
  int sample_every = 10;
  double stability_factor = 1.0;
  InitialCondition ic;
  OutputSpec output;
};

/// Parses the `key = value` run description. Throws ConfigError listing
/// every problem found (unknown keys, missing required keys, violated
/// constraints), one per line.
SimConfig parse_config(std::string_view text);

/// Reads and parses a config file.
SimConfig load_config(const std::string& path);

/// Re-checks the constraints enforced by parse_config; throws ConfigError.
void validate(const SimConfig& config);

}  // namespace mhdstress
