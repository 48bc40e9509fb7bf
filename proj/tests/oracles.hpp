#pragma once

// Independent reference computations for the tests. Nothing here calls the
// FFT path of the library: transforms are direct O(N^2) sums and integrals
// are grid quadratures in physical space.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "mhdstress/spectral.hpp"

namespace oracle {

using mhdstress::Complex;
using mhdstress::SpectralField;
using mhdstress::TorusGrid;

inline constexpr double kPi = std::numbers::pi;

using ScalarFn = std::function<double(double, double, double)>;

inline std::vector<double> point(const TorusGrid& g, std::size_t p) {
  std::vector<double> x(3, 0.0);
  for (int a = 0; a < g.dim(); ++a) x[static_cast<std::size_t>(a)] = g.coordinate(p, a);
  return x;
}

inline std::vector<double> samples(const TorusGrid& g, const ScalarFn& f) {
  std::vector<double> out(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    const auto x = point(g, p);
    out[p] = f(x[0], x[1], x[2]);
  }
  return out;
}

/// c_k = N^-dim sum_x f(x) exp(-i k.x), by direct summation.
inline std::vector<Complex> direct_dft(const TorusGrid& g, const std::vector<double>& f) {
  std::vector<Complex> c(g.size());
  for (std::size_t q = 0; q < g.size(); ++q) {
    Complex acc = 0.0;
    for (std::size_t p = 0; p < g.size(); ++p) {
      double phase = 0.0;
      for (int a = 0; a < g.dim(); ++a) phase += g.wavenumber(q, a) * g.coordinate(p, a);
      acc += f[p] * std::polar(1.0, -phase);
    }
    c[q] = acc / static_cast<double>(g.size());
  }
  return c;
}

/// f(x) = sum_k c_k exp(i k.x), by direct summation (complex result).
inline std::vector<Complex> direct_synthesis(const TorusGrid& g, const std::vector<Complex>& c) {
  std::vector<Complex> f(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    Complex acc = 0.0;
    for (std::size_t q = 0; q < g.size(); ++q) {
      if (c[q] == Complex(0.0)) continue;
      double phase = 0.0;
      for (int a = 0; a < g.dim(); ++a) phase += g.wavenumber(q, a) * g.coordinate(p, a);
      acc += c[q] * std::polar(1.0, phase);
    }
    f[p] = acc;
  }
  return f;
}

/// Band-limited field from analytic component functions (oracle transform).
inline SpectralField field(const TorusGrid& g, const std::vector<ScalarFn>& comps) {
  std::vector<std::vector<Complex>> c;
  for (const auto& f : comps) c.push_back(direct_dft(g, samples(g, f)));
  return SpectralField(g, std::move(c));
}

/// Trapezoid rule on the periodic grid: exact for band-limited integrands.
inline double quadrature(const TorusGrid& g, const std::vector<double>& f) {
  double acc = 0.0;
  for (double x : f) acc += x;
  return acc * g.volume() / static_cast<double>(g.size());
}

/// Real samples of one component via the oracle synthesis.
inline std::vector<double> real_samples(const TorusGrid& g, const std::vector<Complex>& c) {
  const auto f = direct_synthesis(g, c);
  std::vector<double> out(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) out[p] = f[p].real();
  return out;
}

/// int sum_i f_i g_i dV by quadrature of oracle-synthesized samples.
inline double l2_pairing(const SpectralField& f, const SpectralField& h) {
  const TorusGrid& g = f.grid();
  std::vector<double> prod(g.size(), 0.0);
  for (int i = 0; i < f.dim(); ++i) {
    const auto a = real_samples(g, f.component(i));
    const auto b = real_samples(g, h.component(i));
    for (std::size_t p = 0; p < g.size(); ++p) prod[p] += a[p] * b[p];
  }
  return quadrature(g, prod);
}

inline double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (std::size_t p = 0; p < a.component(i).size(); ++p)
      m = std::max(m, std::abs(a.component(i)[p] - b.component(i)[p]));
  return m;
}

inline double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) m = std::max(m, std::abs(a[p] - b[p]));
  return m;
}

inline double max_abs(const SpectralField& a) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& c : a.component(i)) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace oracle
