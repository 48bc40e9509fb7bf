#include "mhdstress/dynamics.hpp"

#include <cmath>
#include <string>

#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

using Samples = std::vector<std::vector<double>>;

Samples zeros(int dim, std::size_t n) { return Samples(static_cast<std::size_t>(dim), std::vector<double>(n, 0.0)); }

// Second derivatives d^2 f_c / dx_a dx_b, computed once per unordered (a, b).
class SecondDerivatives {
 public:
  explicit SecondDerivatives(const SpectralField& f) : dim_(f.dim()) {
    data_.resize(static_cast<std::size_t>(dim_ * dim_ * dim_));
    for (int c = 0; c < dim_; ++c)
      for (int a = 0; a < dim_; ++a)
        for (int b = a; b < dim_; ++b) data_[slot(c, a, b)] = physical_second_derivative(f, c, a, b);
  }

  const std::vector<double>& operator()(int c, int a, int b) const {
    return a <= b ? data_[slot(c, a, b)] : data_[slot(c, b, a)];
  }

 private:
  std::size_t slot(int c, int a, int b) const { return static_cast<std::size_t>((c * dim_ + a) * dim_ + b); }

  int dim_;
  std::vector<std::vector<double>> data_;
};

// out_k += sum_ij dX_i/dx_j * d^2 Y_j / dx_i dx_k, scaled by sign.
void accumulate_stress(const PhysicalGradients& gx, const SecondDerivatives& d2y, int dim, double sign,
                       Samples& out) {
  const std::size_t n = out[0].size();
  for (int k = 0; k < dim; ++k) {
    auto& o = out[static_cast<std::size_t>(k)];
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const auto& a = gx.d(i, j, dim);
        const auto& b = d2y(j, i, k);
        for (std::size_t p = 0; p < n; ++p) o[p] += sign * a[p] * b[p];
      }
    }
  }
}

// dv (raw, unprojected) and dB in physical space.
struct PhysicalRates {
  Samples dv;
  Samples dB;
};

PhysicalRates physical_rates(const MhdState& s, Model model, bool want_induction) {
  const int dim = s.v.dim();
  const std::size_t n = s.grid().size();
  const auto gv = physical_gradients(s.v);
  const auto gB = physical_gradients(s.B);

  PhysicalRates r{zeros(dim, n), want_induction ? zeros(dim, n) : Samples{}};
  for (int k = 0; k < dim; ++k) {
    auto& dv = r.dv[static_cast<std::size_t>(k)];
    for (int j = 0; j < dim; ++j) {
      const auto& vj = gv.value[static_cast<std::size_t>(j)];
      const auto& Bj = gB.value[static_cast<std::size_t>(j)];
      const auto& dvk = gv.d(k, j, dim);
      const auto& dBk = gB.d(k, j, dim);
      for (std::size_t p = 0; p < n; ++p) dv[p] += Bj[p] * dBk[p] - vj[p] * dvk[p];
      if (want_induction) {
        auto& dB = r.dB[static_cast<std::size_t>(k)];
        for (std::size_t p = 0; p < n; ++p) dB[p] += Bj[p] * dvk[p] - vj[p] * dBk[p];
      }
    }
  }
  if (model == Model::stress) accumulate_stress(gB, SecondDerivatives(s.v), dim, 1.0, r.dv);
  return r;
}

}  // namespace

std::string_view to_string(Model m) { return m == Model::classical ? "classical" : "stress"; }

Model parse_model(std::string_view s) {
  if (s == "classical") return Model::classical;
  if (s == "stress") return Model::stress;
  throw ConfigError("unknown model '" + std::string(s) + "' (expected classical or stress)");
}

MhdState::MhdState(SpectralField velocity, SpectralField magnetic, double time)
    : v(std::move(velocity)), B(std::move(magnetic)), t(time) {
  if (!(v.grid() == B.grid())) throw ShapeError("MhdState: v and B live on different grids");
}

void require_solenoidal(const MhdState& s, const char* op) {
  constexpr double tol = 1e-10;
  const double rv = divergence_residual(s.v);
  const double rb = divergence_residual(s.B);
  if (rv > tol || rb > tol)
    throw ContractViolation(std::string(op) + ": state is not divergence-free (v " + std::to_string(rv) + ", B " +
                            std::to_string(rb) + ")");
}

StateRate mhd_rhs(const MhdState& s, Model model) {
  require_solenoidal(s, "mhd_rhs");
  auto r = physical_rates(s, model, true);
  return {leray_project(analyze_dealiased(r.dv, s.grid())), leray_project(analyze_dealiased(r.dB, s.grid()))};
}

StateRate mhd_rhs_classical(const MhdState& s) { return mhd_rhs(s, Model::classical); }

StateRate mhd_rhs_stress(const MhdState& s) { return mhd_rhs(s, Model::stress); }

SpectralField raw_velocity_rhs(const MhdState& s, Model model) {
  require_solenoidal(s, "raw_velocity_rhs");
  return analyze_dealiased(physical_rates(s, model, false).dv, s.grid());
}

SpectralField stress_term(const MhdState& s) {
  require_solenoidal(s, "stress_term");
  const int dim = s.v.dim();
  Samples out = zeros(dim, s.grid().size());
  accumulate_stress(physical_gradients(s.B), SecondDerivatives(s.v), dim, 1.0, out);
  return analyze_dealiased(out, s.grid());
}

SpectralField stress_term_alt(const MhdState& s) {
  require_solenoidal(s, "stress_term_alt");
  const int dim = s.v.dim();
  const std::size_t n = s.grid().size();
  const auto gv = physical_gradients(s.v);
  const SecondDerivatives d2B(s.B);
  // component k: -sum_ij (dv_j/dx_i) (d^2 B_i / dx_j dx_k)
  Samples out = zeros(dim, n);
  for (int k = 0; k < dim; ++k) {
    auto& o = out[static_cast<std::size_t>(k)];
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const auto& a = gv.d(j, i, dim);
        const auto& b = d2B(i, j, k);
        for (std::size_t p = 0; p < n; ++p) o[p] -= a[p] * b[p];
      }
  }
  return analyze_dealiased(out, s.grid());
}

StressTensor stress_tensor_field(const MhdState& s, double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || std::abs(alpha + beta - 1.0) > 1e-12)
    throw ConfigError("stress tensor weights must satisfy alpha + beta = 1 (got alpha + beta = " +
                      std::to_string(alpha + beta) + ")");
  require_solenoidal(s, "stress_tensor_field");
  const int dim = s.v.dim();
  const std::size_t n = s.grid().size();
  const auto gv = physical_gradients(s.v);
  const auto gB = physical_gradients(s.B);

  StressTensor T{s.grid(), alpha, beta, {}};
  T.entries.reserve(static_cast<std::size_t>(dim * dim));
  std::vector<double> acc(n);
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (int j = 0; j < dim; ++j) {
        const auto& dBi_j = gB.d(i, j, dim);
        const auto& dvj_k = gv.d(j, k, dim);
        const auto& dvi_j = gv.d(i, j, dim);
        const auto& dBj_k = gB.d(j, k, dim);
        for (std::size_t p = 0; p < n; ++p) acc[p] += alpha * dBi_j[p] * dvj_k[p] - beta * dvi_j[p] * dBj_k[p];
      }
      T.entries.push_back(dealias(to_spectral(std::span<const double>(acc), s.grid())));
    }
  }
  return T;
}

SpectralField tensor_divergence(const StressTensor& T) {
  const int dim = T.grid.dim();
  SpectralField out(T.grid);
  for (int k = 0; k < dim; ++k) {
    ScalarSpectrum acc(T.grid);
    for (int i = 0; i < dim; ++i) acc += partial_derivative(T.at(k, i), i);
    out.set_scalar(k, acc);
  }
  return out;
}

ScalarSpectrum pressure_solve(const MhdState& s, Model model) {
  return inverse_laplacian(divergence(raw_velocity_rhs(s, model)));
}

}  // namespace mhdstress
