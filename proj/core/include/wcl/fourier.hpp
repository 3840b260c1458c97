#pragma once

#include "wcl/grid.hpp"

namespace wcl {

// Normalization table (h = sqrt(2 pi / N), so h^2 / (2 pi) = 1 / N):
//
//   continuous                               grid
//   (2pi)^{-1/2} int f(x) e^{-ix xi} dx      N^{-1/2} sum_k f_k e^{-i x_k xi_m}
//   (2pi)^{-1} int int a e^{-i(xu + xi v)}   (1/N) sum_{k,m} a_km e^{-i(x_k u + xi_m v)}
//   (2pi)^{-1} int int ahat(u,v) ... du dv   (1/N) sum_{m,n} ahat_mn ...
//
// The one-axis transform is unitary. On a phase grid the two-axis transform
// with the same per-axis factor equals the (2pi)^{-1} phase-space transform
// evaluated on the lattice, so symbol transforms need no extra constants.

// Unitary centered DFT along every axis of the field.
Field dft_centered(const Field& v);
Field idft_centered(const Field& v);

// In-place centered transforms of contiguous data; `axes` is 1 or 2.
void dft_centered_inplace(cplx* data, int N, int axes, bool inverse);

// d^alpha/dxi^alpha d^beta/dx^beta of a phase field by Fourier multipliers.
// For a one-axis field only beta is allowed. Supported: alpha + beta <= 4.
Field spectral_derivative(const Field& a, int alpha, int beta);

namespace detail {
// Same as spectral_derivative without the order cap (each order <= 8).
Field spectral_derivative_any(const Field& a, int alpha, int beta);
}

}  // namespace wcl
