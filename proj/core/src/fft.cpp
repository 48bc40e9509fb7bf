#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace mhdstress::detail {
namespace {

// Plans are created once per (dim, n, sign) and executed through the
// new-array interface, which FFTW documents as thread-safe. Planning
// itself is not, so the cache is guarded.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dim, int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(dim, n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
    auto* buf = fftw_alloc_complex(total);
    int dims[3] = {n, n, n};
    // FFTW_ESTIMATE keeps the plan (and therefore the rounding) identical
    // from run to run; FFTW_UNALIGNED lets us execute on std::vector storage.
    fftw_plan plan = fftw_plan_dft(dim, dims, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(const TorusGrid& grid, int sign, Complex* data) {
  fftw_plan plan = cache().get(grid.dim(), grid.n_points(), sign);
  // fftw_complex is layout-compatible with std::complex<double>; plans are
  // in-place, so execution must be too.
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, p, p);
}

}  // namespace

void fft_forward(const TorusGrid& grid, Complex* data) { execute(grid, FFTW_FORWARD, data); }

void fft_inverse(const TorusGrid& grid, Complex* data) { execute(grid, FFTW_BACKWARD, data); }

}  // namespace mhdstress::detail
