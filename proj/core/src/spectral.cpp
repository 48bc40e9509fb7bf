#include "mhdstress/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_grid(const TorusGrid& a, const TorusGrid& b, const char* what) {
  if (!(a == b)) throw ShapeError(std::string(what) + ": grid mismatch");
}

std::size_t axis_index(std::size_t flat, int axis, int n) {
  for (int a = 0; a < axis; ++a) flat /= static_cast<std::size_t>(n);
  return flat % static_cast<std::size_t>(n);
}

}  // namespace

// --- TorusGrid ------------------------------------------------------------

TorusGrid::TorusGrid(int dim, int n_points) : dim_(dim), n_(n_points), size_(1) {
  if (dim != 2 && dim != 3) throw ShapeError("TorusGrid: dim must be 2 or 3, got " + std::to_string(dim));
  if (n_points < 8 || n_points % 2 != 0)
    throw ShapeError("TorusGrid: n_points must be even and >= 8, got " + std::to_string(n_points));
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n_points);

  auto t = std::make_shared<Tables>();
  t->dk.assign(static_cast<std::size_t>(dim) * size_, 0.0);
  t->k2.assign(size_, 0.0);
  t->nyquist.assign(size_, 0);
  t->retained.assign(size_, 1);
  const int half = n_points / 2;
  const int cutoff = n_points / 3;
  for (std::size_t p = 0; p < size_; ++p) {
    for (int a = 0; a < dim; ++a) {
      const int i = static_cast<int>(axis_index(p, a, n_points));
      const int k = i <= half ? i : i - n_points;
      const bool nyq = (i == half);
      const double dk = nyq ? 0.0 : static_cast<double>(k);
      t->dk[static_cast<std::size_t>(a) * size_ + p] = dk;
      t->k2[p] += dk * dk;
      if (nyq) t->nyquist[p] = 1;
      if (std::abs(k) > cutoff) t->retained[p] = 0;
    }
  }
  tables_ = std::move(t);
}

int TorusGrid::wavenumber(std::size_t flat, int axis) const {
  const int i = static_cast<int>(axis_index(flat, axis, n_));
  return i <= n_ / 2 ? i : i - n_;
}

std::size_t TorusGrid::index_of(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dim_) throw ShapeError("index_of: wavevector has wrong dimension");
  std::size_t flat = 0;
  std::size_t stride = 1;
  for (int a = 0; a < dim_; ++a) {
    const int ka = k[static_cast<std::size_t>(a)];
    if (ka <= -n_ / 2 || ka > n_ / 2) throw ShapeError("index_of: wavenumber out of range");
    const int i = ka >= 0 ? ka : ka + n_;
    flat += static_cast<std::size_t>(i) * stride;
    stride *= static_cast<std::size_t>(n_);
  }
  return flat;
}

double TorusGrid::coordinate(std::size_t flat, int axis) const {
  return 2.0 * std::numbers::pi * static_cast<double>(axis_index(flat, axis, n_)) / n_;
}

double TorusGrid::volume() const { return std::pow(2.0 * std::numbers::pi, dim_); }

// --- ScalarSpectrum -------------------------------------------------------

ScalarSpectrum::ScalarSpectrum(const TorusGrid& g, Coefficients c) : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != grid.size()) throw ShapeError("ScalarSpectrum: coefficient count does not match grid");
}

ScalarSpectrum& ScalarSpectrum::operator+=(const ScalarSpectrum& o) {
  require_same_grid(grid, o.grid, "ScalarSpectrum +=");
  for (std::size_t p = 0; p < coeffs.size(); ++p) coeffs[p] += o.coeffs[p];
  return *this;
}

ScalarSpectrum& ScalarSpectrum::operator-=(const ScalarSpectrum& o) {
  require_same_grid(grid, o.grid, "ScalarSpectrum -=");
  for (std::size_t p = 0; p < coeffs.size(); ++p) coeffs[p] -= o.coeffs[p];
  return *this;
}

ScalarSpectrum& ScalarSpectrum::operator*=(double s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

ScalarSpectrum operator+(ScalarSpectrum a, const ScalarSpectrum& b) { return a += b; }
ScalarSpectrum operator-(ScalarSpectrum a, const ScalarSpectrum& b) { return a -= b; }
ScalarSpectrum operator*(double s, ScalarSpectrum a) { return a *= s; }

// --- SpectralField --------------------------------------------------------

SpectralField::SpectralField(const TorusGrid& grid)
    : grid_(grid), comps_(static_cast<std::size_t>(grid.dim()), Coefficients(grid.size())) {}

SpectralField::SpectralField(const TorusGrid& grid, std::vector<Coefficients> components)
    : grid_(grid), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != grid_.dim())
    throw ShapeError("SpectralField: expected " + std::to_string(grid_.dim()) + " components");
  for (const auto& c : comps_)
    if (c.size() != grid_.size()) throw ShapeError("SpectralField: component length does not match grid");
}

void SpectralField::set_scalar(int i, const ScalarSpectrum& s) {
  require_same_grid(grid_, s.grid, "SpectralField::set_scalar");
  component(i) = s.coeffs;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) { return add_scaled(1.0, o); }

SpectralField& SpectralField::operator-=(const SpectralField& o) { return add_scaled(-1.0, o); }

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : comps_)
    for (auto& z : c) z *= s;
  return *this;
}

SpectralField& SpectralField::add_scaled(double s, const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "SpectralField arithmetic");
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    auto& a = comps_[i];
    const auto& b = o.comps_[i];
    for (std::size_t p = 0; p < a.size(); ++p) a[p] += s * b[p];
  }
  return *this;
}

bool SpectralField::all_finite() const {
  for (const auto& c : comps_)
    for (const auto& z : c)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

// --- transforms -----------------------------------------------------------

ScalarSpectrum to_spectral(std::span<const double> samples, const TorusGrid& grid) {
  if (samples.size() != grid.size())
    throw ShapeError("to_spectral: expected " + std::to_string(grid.size()) + " samples, got " +
                     std::to_string(samples.size()));
  Coefficients data(samples.begin(), samples.end());
  detail::fft_forward(grid, data.data());
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : data) c *= scale;
  return ScalarSpectrum(grid, std::move(data));
}

SpectralField to_spectral(std::span<const std::vector<double>> samples, const TorusGrid& grid) {
  if (static_cast<int>(samples.size()) != grid.dim())
    throw ShapeError("to_spectral: expected " + std::to_string(grid.dim()) + " components, got " +
                     std::to_string(samples.size()));
  std::vector<Coefficients> comps;
  comps.reserve(samples.size());
  for (const auto& s : samples) comps.push_back(to_spectral(std::span<const double>(s), grid).coeffs);
  return SpectralField(grid, std::move(comps));
}

std::vector<double> to_physical(const ScalarSpectrum& s) {
  Coefficients data = s.coeffs;
  detail::fft_inverse(s.grid, data.data());
  std::vector<double> out(data.size());
  std::transform(data.begin(), data.end(), out.begin(), [](const Complex& z) { return z.real(); });
  return out;
}

std::vector<std::vector<double>> to_physical(const SpectralField& f) {
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(f.dim()));
  for (int i = 0; i < f.dim(); ++i) out.push_back(to_physical(f.scalar(i)));
  return out;
}

// --- linear operators -----------------------------------------------------

ScalarSpectrum partial_derivative(const ScalarSpectrum& s, int axis) {
  if (axis < 0 || axis >= s.grid.dim()) throw std::out_of_range("partial_derivative: axis out of range");
  ScalarSpectrum out(s.grid);
  for (std::size_t p = 0; p < s.coeffs.size(); ++p)
    out.coeffs[p] = kI * s.grid.derivative_wavenumber(p, axis) * s.coeffs[p];
  return out;
}

ScalarSpectrum partial_derivative(const SpectralField& f, int component, int axis) {
  if (component < 0 || component >= f.dim()) throw std::out_of_range("partial_derivative: component out of range");
  return partial_derivative(f.scalar(component), axis);
}

SpectralField gradient(const ScalarSpectrum& s) {
  SpectralField out(s.grid);
  for (int a = 0; a < s.grid.dim(); ++a) out.set_scalar(a, partial_derivative(s, a));
  return out;
}

ScalarSpectrum divergence(const SpectralField& f) {
  ScalarSpectrum out(f.grid());
  for (int a = 0; a < f.dim(); ++a) out += partial_derivative(f, a, a);
  return out;
}

ScalarSpectrum inverse_laplacian(const ScalarSpectrum& s) {
  ScalarSpectrum out(s.grid);
  for (std::size_t p = 1; p < s.coeffs.size(); ++p) {
    const double k2 = s.grid.k_squared(p);
    if (k2 > 0.0) out.coeffs[p] = -s.coeffs[p] / k2;
  }
  return out;
}

SpectralField leray_project(const SpectralField& u) {
  const TorusGrid& g = u.grid();
  const int dim = g.dim();
  SpectralField out = u;
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g.is_nyquist(p)) {
      for (int i = 0; i < dim; ++i) out.component(i)[p] = 0.0;
      continue;
    }
    const double k2 = g.k_squared(p);
    if (k2 == 0.0) continue;
    Complex kdotu = 0.0;
    for (int i = 0; i < dim; ++i) kdotu += g.derivative_wavenumber(p, i) * u.component(i)[p];
    const Complex s = kdotu / k2;
    for (int i = 0; i < dim; ++i) out.component(i)[p] -= g.derivative_wavenumber(p, i) * s;
  }
  return out;
}

ScalarSpectrum dealias(const ScalarSpectrum& s) {
  ScalarSpectrum out = s;
  for (std::size_t p = 0; p < out.coeffs.size(); ++p)
    if (!s.grid.retained(p)) out.coeffs[p] = 0.0;
  return out;
}

SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  const TorusGrid& g = f.grid();
  for (int i = 0; i < f.dim(); ++i) {
    auto& c = out.component(i);
    for (std::size_t p = 0; p < c.size(); ++p)
      if (!g.retained(p)) c[p] = 0.0;
  }
  return out;
}

ScalarSpectrum pointwise_product(const ScalarSpectrum& a, const ScalarSpectrum& b) {
  require_same_grid(a.grid, b.grid, "pointwise_product");
  auto pa = to_physical(a);
  const auto pb = to_physical(b);
  for (std::size_t p = 0; p < pa.size(); ++p) pa[p] *= pb[p];
  return dealias(to_spectral(std::span<const double>(pa), a.grid));
}

// --- integrals and norms --------------------------------------------------

double inner_product(const ScalarSpectrum& f, const ScalarSpectrum& g) {
  require_same_grid(f.grid, g.grid, "inner_product");
  double acc = 0.0;
  for (std::size_t p = 0; p < f.coeffs.size(); ++p) acc += (f.coeffs[p] * std::conj(g.coeffs[p])).real();
  return f.grid.volume() * acc;
}

double inner_product(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  double acc = 0.0;
  for (int i = 0; i < f.dim(); ++i) {
    const auto& a = f.component(i);
    const auto& b = g.component(i);
    for (std::size_t p = 0; p < a.size(); ++p) acc += (a[p] * std::conj(b[p])).real();
  }
  return f.grid().volume() * acc;
}

double l2_norm(const SpectralField& f) { return std::sqrt(std::max(0.0, inner_product(f, f))); }

double divergence_residual(const SpectralField& f) {
  const TorusGrid& g = f.grid();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t p = 0; p < g.size(); ++p) {
    Complex kdot = 0.0;
    double mag2 = 0.0;
    for (int i = 0; i < f.dim(); ++i) {
      const Complex c = f.component(i)[p];
      kdot += g.derivative_wavenumber(p, i) * c;
      mag2 += std::norm(c);
    }
    num = std::max(num, std::abs(kdot));
    den = std::max(den, std::sqrt(g.k_squared(p) * mag2));
  }
  return den > 0.0 ? num / den : 0.0;
}

double max_magnitude(const SpectralField& f) {
  const auto phys = to_physical(f);
  double best = 0.0;
  for (std::size_t p = 0; p < f.grid().size(); ++p) {
    double m2 = 0.0;
    for (const auto& comp : phys) m2 += comp[p] * comp[p];
    best = std::max(best, m2);
  }
  return std::sqrt(best);
}

double max_abs_coefficient(const SpectralField& f) {
  double best = 0.0;
  for (int i = 0; i < f.dim(); ++i)
    for (const auto& c : f.component(i)) best = std::max(best, std::abs(c));
  return best;
}

// --- pseudo-spectral helpers ----------------------------------------------

PhysicalGradients physical_gradients(const SpectralField& f) {
  const int dim = f.dim();
  PhysicalGradients out;
  out.value = to_physical(f);
  out.grad.reserve(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) out.grad.push_back(to_physical(partial_derivative(f, i, j)));
  return out;
}

std::vector<double> physical_second_derivative(const SpectralField& f, int component, int a, int b) {
  return to_physical(partial_derivative(partial_derivative(f, component, a), b));
}

SpectralField analyze_dealiased(std::span<const std::vector<double>> samples, const TorusGrid& grid) {
  return dealias(to_spectral(samples, grid));
}

}  // namespace mhdstress
