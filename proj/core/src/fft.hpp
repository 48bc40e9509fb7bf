#pragma once

#include "mhdstress/spectral.hpp"

namespace mhdstress::detail {

/// In-place unnormalized forward transform (exp(-i k.x)).
void fft_forward(const TorusGrid& grid, Complex* data);

/// In-place unnormalized inverse transform (exp(+i k.x)).
void fft_inverse(const TorusGrid& grid, Complex* data);

}  // namespace mhdstress::detail
