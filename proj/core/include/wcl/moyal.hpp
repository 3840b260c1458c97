#pragma once

#include "wcl/grid.hpp"
#include "wcl/report.hpp"
#include "wcl/symbol.hpp"

namespace wcl {

// Closed-form a_p # a_q for Gaussians (d = 1):
//   c = c_p c_q / (1 + l_p l_q),  l = (l_p + l_q) / (1 + l_p l_q).
GaussianSymbolParams moyal_gaussian(const GaussianSymbolParams& p, const GaussianSymbolParams& q);

// a # b on a shared phase grid: twisted convolution of ahat and bhat with
// zero padding, transformed back. Both symbols should live in half the box.
Field moyal_fft(const Field& a, const Field& b);

// sum_{alpha <= M} (1/alpha!) (1/i)^alpha d_xi^alpha a d_x^alpha b, M <= 3.
Field moyal_expansion(const Field& a, const Field& b, int M);

struct RemainderFit {
    double beta = 0.0;  // |r| <~ C <xi>^{-beta}
    double C = 0.0;
    double max_abs = 0.0;
    bool machine_precision = false;  // remainder below the noise floor, no fit
    int samples = 0;
};

// r = moyal_fft - moyal_expansion(M); envelope max_x |r(x, xi)| fitted on
// 2 <= |xi| <= xi_max/2 by least squares in log-log.
RemainderFit remainder_decay(const Field& a, const Field& b, int M);

// b = a + (1/i) c d_xi d_x a with c = 1/2 (first term of the Weyl to
// Kohn-Nirenberg conversion). `factor` overrides c.
Field kn_symbol(const Field& a, double factor = 0.5);

// T_b f(x_k) = N^{-1/2} sum_m b(x_k, xi_m) fhat_m e^{i x_k xi_m}.
Vector kn_apply(const Field& b, const Vector& f);
Matrix kn_matrix(const Field& b);

struct KernelBounds {
    double row = 0.0;  // sup_x sum_y |K(x, y)|
    double col = 0.0;  // sup_y sum_x |K(x, y)|
    // Schur test: ||T_r|| <= sqrt(row col).
    double schur() const;
};

KernelBounds kernel_bounds(const Field& r);

}  // namespace wcl
