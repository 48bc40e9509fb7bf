#include "mhdstress/diagnostics.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

bool has_zero_mean(const SpectralField& f) {
  const double scale = max_abs_coefficient(f);
  for (int i = 0; i < f.dim(); ++i)
    if (std::abs(f.component(i)[0]) > 1e-13 * scale) return false;
  return true;
}

}  // namespace

double energy(const MhdState& s) { return inner_product(s.v, s.v) + inner_product(s.B, s.B); }

double cross_helicity(const MhdState& s) { return inner_product(s.v, s.B); }

std::vector<double> momentum(const MhdState& s) {
  std::vector<double> out(static_cast<std::size_t>(s.v.dim()));
  const double vol = s.grid().volume();
  for (int i = 0; i < s.v.dim(); ++i) out[static_cast<std::size_t>(i)] = vol * s.v.component(i)[0].real();
  return out;
}

double magnetic_helicity(const MhdState& s) {
  const TorusGrid& g = s.grid();
  if (g.dim() != 3) throw ShapeError("magnetic_helicity: defined for dim = 3 only");
  if (!has_zero_mean(s.B)) throw ContractViolation("magnetic_helicity: B has a nonzero mean; the gauge is ambiguous");

  const Complex I{0.0, 1.0};
  SpectralField A(g);
  for (std::size_t p = 1; p < g.size(); ++p) {
    const double k2 = g.k_squared(p);
    if (k2 == 0.0) continue;
    const double k[3] = {g.derivative_wavenumber(p, 0), g.derivative_wavenumber(p, 1), g.derivative_wavenumber(p, 2)};
    const Complex b[3] = {s.B.component(0)[p], s.B.component(1)[p], s.B.component(2)[p]};
    A.component(0)[p] = I * (k[1] * b[2] - k[2] * b[1]) / k2;
    A.component(1)[p] = I * (k[2] * b[0] - k[0] * b[2]) / k2;
    A.component(2)[p] = I * (k[0] * b[1] - k[1] * b[0]) / k2;
  }
  return inner_product(A, s.B);
}

std::pair<double, double> divergence_residuals(const MhdState& s) {
  return {divergence_residual(s.v), divergence_residual(s.B)};
}

InvariantRecord measure(const MhdState& s) {
  InvariantRecord r;
  r.t = s.t;
  r.energy = energy(s);
  r.cross_helicity = cross_helicity(s);
  r.momentum = momentum(s);
  if (s.grid().dim() == 3 && has_zero_mean(s.B)) r.magnetic_helicity = magnetic_helicity(s);
  std::tie(r.max_div_v, r.max_div_B) = divergence_residuals(s);
  return r;
}

MhdState alfven_exact(const SpectralField& w, std::span<const double> B0, double t) {
  const TorusGrid& g = w.grid();
  if (static_cast<int>(B0.size()) != g.dim()) throw ShapeError("alfven_exact: B0 has wrong dimension");
  if (divergence_residual(w) > 1e-10) throw ContractViolation("alfven_exact: w is not divergence-free");

  SpectralField shifted(g);
  for (std::size_t p = 0; p < g.size(); ++p) {
    double phase = 0.0;
    for (int a = 0; a < g.dim(); ++a) phase += g.derivative_wavenumber(p, a) * B0[static_cast<std::size_t>(a)];
    const Complex rot = std::polar(1.0, phase * t);
    for (int i = 0; i < g.dim(); ++i) shifted.component(i)[p] = w.component(i)[p] * rot;
  }
  SpectralField B = shifted;
  for (int i = 0; i < g.dim(); ++i) B.component(i)[0] += B0[static_cast<std::size_t>(i)];
  return MhdState(std::move(shifted), std::move(B), t);
}

}  // namespace mhdstress
