#pragma once

#include <cstdint>
#include <random>

#include "mhdstress/config.hpp"
#include "mhdstress/dynamics.hpp"

namespace mhdstress {

/// Uniform draw in [-1, 1) from the top 53 bits of the generator, so the
/// stream is fixed by the seed alone.
double uniform_symmetric(std::mt19937_64& rng);

/// Random real field with every |k_i| <= k_cap, zero mean, projected to
/// divergence-free and scaled so that max_x |f(x)| = amplitude.
SpectralField random_solenoidal_field(const TorusGrid& grid, int k_cap, double amplitude, std::mt19937_64& rng);

/// Field assembled from explicit modes (conjugates added).
SpectralField field_from_modes(const TorusGrid& grid, std::span<const ModeSpec> modes, char which);

/// Deterministic initial state for a validated config.
MhdState make_initial_state(const SimConfig& config);

}  // namespace mhdstress
