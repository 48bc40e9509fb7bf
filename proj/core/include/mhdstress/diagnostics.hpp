#pragma once

#include <optional>
#include <vector>

#include "mhdstress/dynamics.hpp"

namespace mhdstress {

/// One sampled row of conserved quantities and constraint residuals.
struct InvariantRecord {
  double t = 0.0;
  double energy = 0.0;
  double cross_helicity = 0.0;
  std::vector<double> momentum;
  std::optional<double> magnetic_helicity;  // 3D with zero-mean B only
  double max_div_v = 0.0;
  double max_div_B = 0.0;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// int |v|^2 + |B|^2 dV
double energy(const MhdState& s);

/// int v . B dV
double cross_helicity(const MhdState& s);

/// int v dV, one entry per axis.
std::vector<double> momentum(const MhdState& s);

/// int A . B dV with the Coulomb-gauge potential A_k = i k x B_k / |k|^2.
/// Requires dim == 3 (ShapeError) and a zero-mean B (ContractViolation).
double magnetic_helicity(const MhdState& s);

/// Relative divergence residuals of v and B (see divergence_residual).
std::pair<double, double> divergence_residuals(const MhdState& s);

/// Full diagnostic row; magnetic helicity is filled in when it is defined.
InvariantRecord measure(const MhdState& s);

/// Travelling Alfven wave riding on the uniform field B0:
/// v = w(x + B0 t), B = B0 + w(x + B0 t).
MhdState alfven_exact(const SpectralField& w, std::span<const double> B0, double t);

}  // namespace mhdstress
