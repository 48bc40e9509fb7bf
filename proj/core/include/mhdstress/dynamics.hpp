#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "mhdstress/spectral.hpp"

namespace mhdstress {

enum class Model { classical, stress };

std::string_view to_string(Model m);
/// Throws ConfigError on anything other than "classical" or "stress".
Model parse_model(std::string_view s);

/// Velocity and magnetic field (Alfven units) at time t.
struct MhdState {
  SpectralField v;
  SpectralField B;
  double t = 0.0;

  explicit MhdState(const TorusGrid& grid) : v(grid), B(grid) {}
  MhdState(SpectralField velocity, SpectralField magnetic, double time = 0.0);

  const TorusGrid& grid() const { return v.grid(); }
};

/// Time derivatives of (v, B).
struct StateRate {
  SpectralField dv;
  SpectralField dB;
};

/// Throws ContractViolation unless both fields are divergence-free.
void require_solenoidal(const MhdState& s, const char* op);

StateRate mhd_rhs_classical(const MhdState& s);
StateRate mhd_rhs_stress(const MhdState& s);
StateRate mhd_rhs(const MhdState& s, Model model);

/// sum_ij (dB_i/dx_j) grad(dv_j/dx_i), dealiased but not projected.
SpectralField stress_term(const MhdState& s);

/// -sum_ij (dv_j/dx_i) grad(dB_i/dx_j); differs from stress_term by a gradient.
SpectralField stress_term_alt(const MhdState& s);

/// Asymmetric stress alpha*T + beta*T' with
///   T_ki  =  sum_j (dB_i/dx_j)(dv_j/dx_k)
///   T'_ki = -sum_j (dv_i/dx_j)(dB_j/dx_k)
struct StressTensor {
  TorusGrid grid;
  double alpha = 1.0;
  double beta = 0.0;
  std::vector<ScalarSpectrum> entries;  // row-major, entries[k * dim + i]

  const ScalarSpectrum& at(int k, int i) const {
    return entries[static_cast<std::size_t>(k * grid.dim() + i)];
  }
};

/// Throws ConfigError unless |alpha + beta - 1| <= 1e-12.
StressTensor stress_tensor_field(const MhdState& s, double alpha, double beta);

/// (div T)_k = sum_i dT_ki / dx_i.
SpectralField tensor_divergence(const StressTensor& T);

/// Velocity forcing before pressure elimination:
/// -(v.grad)v + (B.grad)B, plus stress_term for the stress model. Dealiased.
SpectralField raw_velocity_rhs(const MhdState& s, Model model);

/// Zero-mean pressure p with grad p = raw - projected velocity forcing.
ScalarSpectrum pressure_solve(const MhdState& s, Model model);

}  // namespace mhdstress
