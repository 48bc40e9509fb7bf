#include "mhdstress/initial_conditions.hpp"

#include <cmath>
#include <string>

#include "mhdstress/diagnostics.hpp"
#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

std::size_t conjugate_index(const TorusGrid& g, std::size_t p) {
  std::vector<int> k(static_cast<std::size_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) k[static_cast<std::size_t>(a)] = -g.wavenumber(p, a);
  return g.index_of(k);
}

void normalize_max(SpectralField& f, double amplitude) {
  const double m = max_magnitude(f);
  if (m > 0.0) f *= amplitude / m;
}

void require_divergence_free(const SpectralField& f, const std::string& what) {
  const double r = divergence_residual(f);
  if (r > 1e-12) throw ConfigError(what + " is not divergence-free (relative residual " + std::to_string(r) + ")");
}

}  // namespace

double uniform_symmetric(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

SpectralField random_solenoidal_field(const TorusGrid& grid, int k_cap, double amplitude, std::mt19937_64& rng) {
  if (k_cap < 1 || k_cap > grid.dealias_cutoff()) throw ConfigError("k_cap must lie in 1..dealias cutoff");
  SpectralField f(grid);
  for (std::size_t p = 1; p < grid.size(); ++p) {
    bool inside = true;
    for (int a = 0; a < grid.dim(); ++a)
      if (std::abs(grid.wavenumber(p, a)) > k_cap) inside = false;
    if (!inside) continue;
    const std::size_t q = conjugate_index(grid, p);
    if (q < p) continue;  // filled from its partner
    for (int i = 0; i < grid.dim(); ++i) {
      const Complex c{uniform_symmetric(rng), uniform_symmetric(rng)};
      f.component(i)[p] = c;
      f.component(i)[q] = std::conj(c);
    }
  }
  f = leray_project(f);
  normalize_max(f, amplitude);
  return f;
}

SpectralField field_from_modes(const TorusGrid& grid, std::span<const ModeSpec> modes, char which) {
  SpectralField f(grid);
  for (const auto& m : modes) {
    if (m.field != which) continue;
    const std::size_t p = grid.index_of(m.k);
    const std::size_t q = conjugate_index(grid, p);
    auto& c = f.component(m.component - 1);
    c[p] = m.coeff;
    c[q] = std::conj(m.coeff);
  }
  return f;
}

MhdState make_initial_state(const SimConfig& config) {
  validate(config);
  const TorusGrid grid(config.dim, config.n_points);
  const auto& ic = config.ic;

  switch (ic.kind) {
    case InitialKind::random_bandlimited: {
      std::mt19937_64 rng(ic.seed);
      SpectralField v = random_solenoidal_field(grid, ic.k_cap, ic.amplitude, rng);
      SpectralField B = random_solenoidal_field(grid, ic.k_cap, ic.amplitude, rng);
      if (ic.correlation > 0.0) {
        // Both fields have unit-amplitude shape before blending.
        B = (1.0 - ic.correlation) * B + ic.correlation * v;
        normalize_max(B, ic.amplitude);
      }
      for (std::size_t i = 0; i < ic.mean_v.size(); ++i) v.component(static_cast<int>(i))[0] += ic.mean_v[i];
      return MhdState(std::move(v), std::move(B));
    }
    case InitialKind::aligned_steady: {
      SpectralField f(grid);
      std::vector<int> k(static_cast<std::size_t>(config.dim), 0);
      k[1] = 1;
      f.component(0)[grid.index_of(k)] = 0.5 * ic.amplitude;
      k[1] = -1;
      f.component(0)[grid.index_of(k)] = 0.5 * ic.amplitude;
      return MhdState(f, f);
    }
    case InitialKind::alfven: {
      const SpectralField w = field_from_modes(grid, ic.modes, 'w');
      require_divergence_free(w, "Alfven profile w");
      return alfven_exact(w, ic.B0, 0.0);
    }
    case InitialKind::explicit_modes: {
      SpectralField v = field_from_modes(grid, ic.modes, 'v');
      SpectralField B = field_from_modes(grid, ic.modes, 'B');
      require_divergence_free(v, "initial velocity");
      require_divergence_free(B, "initial magnetic field");
      return MhdState(std::move(v), std::move(B));
    }
  }
  throw ConfigError("unhandled initial condition kind");
}

}  // namespace mhdstress
