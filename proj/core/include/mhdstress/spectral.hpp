#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace mhdstress {

using Complex = std::complex<double>;
using Coefficients = std::vector<Complex>;

/// Periodic box [0, 2*pi)^dim sampled with n points per axis.
///
/// Coefficient and sample arrays share one flat layout: axis 1 varies
/// fastest, so flat = i1 + n*i2 + n*n*i3. Along each axis, index i holds
/// wavenumber i for i <= n/2 and i - n above it (standard FFT order).
class TorusGrid {
 public:
  TorusGrid(int dim, int n_points);

  int dim() const { return dim_; }
  int n_points() const { return n_; }
  std::size_t size() const { return size_; }

  /// Largest retained |k_i| under the 2/3 rule, floor(n/3).
  int dealias_cutoff() const { return n_ / 3; }

  /// Signed wavenumber of `flat` along `axis` (0-based). The Nyquist
  /// index reports +n/2.
  int wavenumber(std::size_t flat, int axis) const;

  /// Wavenumber used by derivative operators: identical to wavenumber()
  /// except that the Nyquist index maps to zero.
  double derivative_wavenumber(std::size_t flat, int axis) const {
    return tables_->dk[static_cast<std::size_t>(axis) * size_ + flat];
  }

  /// |k|^2 with Nyquist components treated as zero.
  double k_squared(std::size_t flat) const { return tables_->k2[flat]; }

  /// True if any axis sits at the Nyquist index.
  bool is_nyquist(std::size_t flat) const { return tables_->nyquist[flat] != 0; }

  /// True if every |k_i| <= dealias_cutoff().
  bool retained(std::size_t flat) const { return tables_->retained[flat] != 0; }

  /// Flat index of an integer wavevector (components in -n/2+1 .. n/2).
  std::size_t index_of(std::span<const int> k) const;

  /// Physical coordinate of grid point `flat` along `axis`.
  double coordinate(std::size_t flat, int axis) const;

  /// Volume of the box, (2*pi)^dim.
  double volume() const;

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
    return a.dim_ == b.dim_ && a.n_ == b.n_;
  }

 private:
  struct Tables {
    std::vector<double> dk;  // dim * size
    std::vector<double> k2;
    std::vector<unsigned char> nyquist;
    std::vector<unsigned char> retained;
  };

  int dim_;
  int n_;
  std::size_t size_;
  std::shared_ptr<const Tables> tables_;
};

/// Fourier coefficients of one real scalar function on the torus.
struct ScalarSpectrum {
  TorusGrid grid;
  Coefficients coeffs;

  explicit ScalarSpectrum(const TorusGrid& g) : grid(g), coeffs(g.size()) {}
  ScalarSpectrum(const TorusGrid& g, Coefficients c);

  Complex mean() const { return coeffs[0]; }

  ScalarSpectrum& operator+=(const ScalarSpectrum& o);
  ScalarSpectrum& operator-=(const ScalarSpectrum& o);
  ScalarSpectrum& operator*=(double s);
};

ScalarSpectrum operator+(ScalarSpectrum a, const ScalarSpectrum& b);
ScalarSpectrum operator-(ScalarSpectrum a, const ScalarSpectrum& b);
ScalarSpectrum operator*(double s, ScalarSpectrum a);

/// A dim-component real vector field (or 1-form representative) stored
/// as truncated Fourier coefficients, c_k = N^-dim sum_x f(x) exp(-i k.x).
class SpectralField {
 public:
  explicit SpectralField(const TorusGrid& grid);
  SpectralField(const TorusGrid& grid, std::vector<Coefficients> components);

  const TorusGrid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }

  const Coefficients& component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
  Coefficients& component(int i) { return comps_.at(static_cast<std::size_t>(i)); }

  ScalarSpectrum scalar(int i) const { return ScalarSpectrum(grid_, component(i)); }
  void set_scalar(int i, const ScalarSpectrum& s);

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);

  /// c += s * o
  SpectralField& add_scaled(double s, const SpectralField& o);

  bool all_finite() const;

  friend bool operator==(const SpectralField& a, const SpectralField& b) {
    return a.grid_ == b.grid_ && a.comps_ == b.comps_;
  }

 private:
  TorusGrid grid_;
  std::vector<Coefficients> comps_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

// --- transforms -----------------------------------------------------------

/// Forward DFT of real samples, one span per component.
SpectralField to_spectral(std::span<const std::vector<double>> samples, const TorusGrid& grid);
ScalarSpectrum to_spectral(std::span<const double> samples, const TorusGrid& grid);

/// Inverse transform; returns the real part of the synthesized samples.
std::vector<std::vector<double>> to_physical(const SpectralField& f);
std::vector<double> to_physical(const ScalarSpectrum& s);

/// Samples a callable f(x) -> double on the grid; x is a span of dim coordinates.
template <class F>
std::vector<double> sample(const TorusGrid& grid, F&& f) {
  std::vector<double> out(grid.size());
  std::vector<double> x(static_cast<std::size_t>(grid.dim()));
  for (std::size_t p = 0; p < grid.size(); ++p) {
    for (int a = 0; a < grid.dim(); ++a) x[static_cast<std::size_t>(a)] = grid.coordinate(p, a);
    out[p] = f(std::span<const double>(x));
  }
  return out;
}

// --- linear operators -----------------------------------------------------

/// Coefficients of d f_component / d x_axis.
ScalarSpectrum partial_derivative(const SpectralField& f, int component, int axis);
ScalarSpectrum partial_derivative(const ScalarSpectrum& s, int axis);

/// Spectral gradient of a scalar.
SpectralField gradient(const ScalarSpectrum& s);

/// Spectral divergence sum_i d f_i / d x_i.
ScalarSpectrum divergence(const SpectralField& f);

/// Inverse Laplacian on zero-mean functions; the k = 0 output is zero.
ScalarSpectrum inverse_laplacian(const ScalarSpectrum& s);

/// Orthogonal projection onto divergence-free fields,
/// u_k -> u_k - k (k.u_k) / |k|^2. Mean mode kept, Nyquist modes zeroed.
SpectralField leray_project(const SpectralField& u);

/// Zero every coefficient with some |k_i| > floor(n/3).
SpectralField dealias(const SpectralField& f);
ScalarSpectrum dealias(const ScalarSpectrum& s);

/// Pseudo-spectral product: synthesize, multiply pointwise, analyze, dealias.
ScalarSpectrum pointwise_product(const ScalarSpectrum& a, const ScalarSpectrum& b);

// --- integrals and norms --------------------------------------------------

/// L2 pairing over the box via Parseval: (2*pi)^dim sum_k sum_i f_ik conj(g_ik).
double inner_product(const SpectralField& f, const SpectralField& g);
double inner_product(const ScalarSpectrum& f, const ScalarSpectrum& g);

/// sqrt(inner_product(f, f)).
double l2_norm(const SpectralField& f);

/// max_k |k . f_k| / max_k |k| |f_k|; zero for the zero field.
double divergence_residual(const SpectralField& f);

/// Largest pointwise Euclidean magnitude over the grid.
double max_magnitude(const SpectralField& f);

/// Maximal |coefficient| over all components.
double max_abs_coefficient(const SpectralField& f);

}  // namespace mhdstress

namespace mhdstress {

// --- pseudo-spectral helpers ----------------------------------------------

/// Physical-space samples of a field and its first derivatives.
/// grad[i * dim + j] holds d f_i / d x_j.
struct PhysicalGradients {
  std::vector<std::vector<double>> value;
  std::vector<std::vector<double>> grad;

  const std::vector<double>& d(int i, int j, int dim) const {
    return grad[static_cast<std::size_t>(i * dim + j)];
  }
};

PhysicalGradients physical_gradients(const SpectralField& f);

/// Samples of d^2 f_component / d x_a d x_b.
std::vector<double> physical_second_derivative(const SpectralField& f, int component, int a, int b);

/// Analyze per-component physical samples and apply the 2/3 mask.
SpectralField analyze_dealiased(std::span<const std::vector<double>> samples, const TorusGrid& grid);

}  // namespace mhdstress
