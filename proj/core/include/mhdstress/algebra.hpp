#pragma once

#include "mhdstress/spectral.hpp"

namespace mhdstress {

/// Element of SVect (+) Omega^1 / d Omega^0 with the cocycle-deformed bracket.
///
/// `vf` is a divergence-free vector field. `form` is the co-closed
/// representative of a 1-form class, stored by its component functions
/// w_j of sum_j w_j dx_j; the k = 0 mode survives the quotient and is kept.
struct AlgebraElement {
  SpectralField vf;
  SpectralField form;

  explicit AlgebraElement(const TorusGrid& grid) : vf(grid), form(grid) {}
  AlgebraElement(SpectralField vector_part, SpectralField form_part);

  const TorusGrid& grid() const { return vf.grid(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(double s);
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(double s, AlgebraElement a);

/// sqrt(|vf|^2 + |form|^2) in L2.
double norm(const AlgebraElement& x);

/// Relative divergence above which inputs are rejected.
inline constexpr double kDivergenceTolerance = 1e-10;

/// Vector-field bracket sum_ij (v_i dw_j/dx_i - w_i dv_j/dx_i) d_j.
/// Throws ContractViolation if either input is not divergence-free.
SpectralField vf_bracket(const SpectralField& v, const SpectralField& w);

/// Lie derivative of the 1-form class w by v:
/// sum_ij v_i (dw_j/dx_i) dx_j + sum_j w_j d(v_j), reduced modulo exact forms.
SpectralField lie_derivative(const SpectralField& v, const SpectralField& w_form);

/// The 2-cocycle sum_ij (dv_i/dx_j) d(dw_j/dx_i), reduced modulo exact forms.
SpectralField cocycle_tau(const SpectralField& v, const SpectralField& w);

/// Bracket of g(tau); the 1-form/1-form bracket vanishes.
AlgebraElement full_bracket(const AlgebraElement& x, const AlgebraElement& y);

/// (X | Y) = <X.vf, Y.form> + <X.form, Y.vf>.
double invariant_form(const AlgebraElement& x, const AlgebraElement& y);

/// Involution swapping the vector-field and 1-form parts.
AlgebraElement inertia_apply(const AlgebraElement& x);

/// Right-hand side of X_t = -[AX, X], evaluated as [X, AX].
AlgebraElement euler_rhs(const AlgebraElement& x);

}  // namespace mhdstress
