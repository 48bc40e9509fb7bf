#include "mhdstress/algebra.hpp"

#include <cmath>
#include <string>

#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

void require_divergence_free(const SpectralField& f, const char* op, const char* arg) {
  const double r = divergence_residual(f);
  if (r > kDivergenceTolerance)
    throw ContractViolation(std::string(op) + ": argument '" + arg + "' is not divergence-free (residual " +
                            std::to_string(r) + ")");
}

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* op) {
  if (!(a.grid() == b.grid())) throw ShapeError(std::string(op) + ": grid mismatch");
}

}  // namespace

AlgebraElement::AlgebraElement(SpectralField vector_part, SpectralField form_part)
    : vf(std::move(vector_part)), form(std::move(form_part)) {
  require_same_grid(vf, form, "AlgebraElement");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  vf += o.vf;
  form += o.form;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  vf -= o.vf;
  form -= o.form;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) {
  vf *= s;
  form *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }

double norm(const AlgebraElement& x) {
  return std::sqrt(inner_product(x.vf, x.vf) + inner_product(x.form, x.form));
}

SpectralField vf_bracket(const SpectralField& v, const SpectralField& w) {
  require_same_grid(v, w, "vf_bracket");
  require_divergence_free(v, "vf_bracket", "v");
  require_divergence_free(w, "vf_bracket", "w");

  const int dim = v.dim();
  const auto pv = physical_gradients(v);
  const auto pw = physical_gradients(w);
  const std::size_t n = v.grid().size();

  std::vector<std::vector<double>> out(static_cast<std::size_t>(dim), std::vector<double>(n, 0.0));
  for (int j = 0; j < dim; ++j) {
    auto& o = out[static_cast<std::size_t>(j)];
    for (int i = 0; i < dim; ++i) {
      const auto& vi = pv.value[static_cast<std::size_t>(i)];
      const auto& wi = pw.value[static_cast<std::size_t>(i)];
      const auto& dwj = pw.d(j, i, dim);
      const auto& dvj = pv.d(j, i, dim);
      for (std::size_t p = 0; p < n; ++p) o[p] += vi[p] * dwj[p] - wi[p] * dvj[p];
    }
  }
  return leray_project(analyze_dealiased(out, v.grid()));
}

SpectralField lie_derivative(const SpectralField& v, const SpectralField& w_form) {
  require_same_grid(v, w_form, "lie_derivative");
  require_divergence_free(v, "lie_derivative", "v");
  require_divergence_free(w_form, "lie_derivative", "w_form");

  const int dim = v.dim();
  const auto pv = physical_gradients(v);
  const auto pw = physical_gradients(w_form);
  const std::size_t n = v.grid().size();

  // component k: sum_i v_i dw_k/dx_i + sum_j w_j dv_j/dx_k
  std::vector<std::vector<double>> out(static_cast<std::size_t>(dim), std::vector<double>(n, 0.0));
  for (int k = 0; k < dim; ++k) {
    auto& o = out[static_cast<std::size_t>(k)];
    for (int i = 0; i < dim; ++i) {
      const auto& vi = pv.value[static_cast<std::size_t>(i)];
      const auto& wi = pw.value[static_cast<std::size_t>(i)];
      const auto& dwk = pw.d(k, i, dim);
      const auto& dvi = pv.d(i, k, dim);
      for (std::size_t p = 0; p < n; ++p) o[p] += vi[p] * dwk[p] + wi[p] * dvi[p];
    }
  }
  return leray_project(analyze_dealiased(out, v.grid()));
}

SpectralField cocycle_tau(const SpectralField& v, const SpectralField& w) {
  require_same_grid(v, w, "cocycle_tau");
  require_divergence_free(v, "cocycle_tau", "v");
  require_divergence_free(w, "cocycle_tau", "w");

  const int dim = v.dim();
  const auto pv = physical_gradients(v);
  const std::size_t n = v.grid().size();

  // component k: sum_ij (dv_i/dx_j) (d^2 w_j / dx_i dx_k)
  std::vector<std::vector<double>> out(static_cast<std::size_t>(dim), std::vector<double>(n, 0.0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& dvij = pv.d(i, j, dim);
      for (int k = 0; k < dim; ++k) {
        const auto d2w = physical_second_derivative(w, j, i, k);
        auto& o = out[static_cast<std::size_t>(k)];
        for (std::size_t p = 0; p < n; ++p) o[p] += dvij[p] * d2w[p];
      }
    }
  }
  return leray_project(analyze_dealiased(out, v.grid()));
}

AlgebraElement full_bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.grid() == y.grid())) throw ShapeError("full_bracket: grid mismatch");
  SpectralField form = cocycle_tau(x.vf, y.vf);
  form += lie_derivative(x.vf, y.form);
  form -= lie_derivative(y.vf, x.form);
  return AlgebraElement(vf_bracket(x.vf, y.vf), leray_project(form));
}

double invariant_form(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.grid() == y.grid())) throw ShapeError("invariant_form: grid mismatch");
  return inner_product(x.vf, y.form) + inner_product(x.form, y.vf);
}

AlgebraElement inertia_apply(const AlgebraElement& x) { return AlgebraElement(x.form, x.vf); }

AlgebraElement euler_rhs(const AlgebraElement& x) { return full_bracket(x, inertia_apply(x)); }

}  // namespace mhdstress
