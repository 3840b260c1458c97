#pragma once

// Reference implementations written straight from the defining formulas,
// without FFTs, phase tables or backend machinery. Slow on purpose.

#include <cmath>
#include <complex>
#include <vector>

#include "wcl/grid.hpp"

namespace oracle {

using wcl::cplx;
inline constexpr cplx I{0.0, 1.0};

// N^{-1/2} sum_k f_k e^{-i x_k xi_m}
inline std::vector<cplx> dft1(const std::vector<cplx>& f, const wcl::StateGrid& g, bool inverse = false) {
    const double sgn = inverse ? 1.0 : -1.0;
    std::vector<cplx> out(f.size());
    for (int m = 0; m < g.N; ++m) {
        cplx acc = 0.0;
        for (int k = 0; k < g.N; ++k) acc += f[k] * std::exp(sgn * I * g.point(k) * g.point(m));
        out[m] = acc / std::sqrt(static_cast<double>(g.N));
    }
    return out;
}

// (1/N) sum_{k,j} a_kj e^{-i(x_k u_m + xi_j v_n)}
inline wcl::Field dft2(const wcl::Field& a) {
    const wcl::PhaseGrid g = a.phase_grid();
    wcl::Field out = wcl::Field::zeros(g);
    const int N = g.N();
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            cplx acc = 0.0;
            for (int k = 0; k < N; ++k)
                for (int j = 0; j < N; ++j)
                    acc += a.at(k, j) * std::exp(-I * (g.axis.point(k) * g.axis.point(m) +
                                                       g.axis.point(j) * g.axis.point(n)));
            out.at(m, n) = acc / static_cast<double>(N);
        }
    return out;
}

// Normalized Hermite functions by the three-term recurrence.
inline std::vector<double> hermite_functions(int count, double x) {
    std::vector<double> psi(static_cast<std::size_t>(count));
    psi[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (count > 1) psi[1] = std::sqrt(2.0) * x * psi[0];
    for (int n = 1; n + 1 < count; ++n)
        psi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * psi[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * psi[n - 1];
    return psi;
}

// C_k g(x, xi) = (1/N) sum_{y, eta} e^{i(x eta - y xi)/2} k(y, eta) g(x - y, xi - eta),
// g read as zero outside the box.
inline wcl::Field twisted_zero(const wcl::Field& k, const wcl::Field& g) {
    const wcl::PhaseGrid pg = k.phase_grid();
    const int N = pg.N(), H = N / 2;
    wcl::Field out = wcl::Field::zeros(pg);
    for (int ix = 0; ix < N; ++ix)
        for (int ixi = 0; ixi < N; ++ixi) {
            const double x = pg.axis.point(ix), xi = pg.axis.point(ixi);
            cplx acc = 0.0;
            for (int iy = 0; iy < N; ++iy)
                for (int ie = 0; ie < N; ++ie) {
                    const int sx = (ix - H) - (iy - H) + H, sxi = (ixi - H) - (ie - H) + H;
                    if (sx < 0 || sx >= N || sxi < 0 || sxi >= N) continue;
                    const double y = pg.axis.point(iy), eta = pg.axis.point(ie);
                    acc += std::exp(0.5 * I * (x * eta - y * xi)) * k.at(iy, ie) * g.at(sx, sxi);
                }
            out.at(ix, ixi) = acc / static_cast<double>(N);
        }
    return out;
}

// t max_n n e^{-tn} by brute force over n.
inline double tlp_brute(double t, int n_limit = 100000) {
    double best = 0.0;
    for (int n = 1; n <= n_limit; ++n) best = std::max(best, t * n * std::exp(-t * n));
    return best;
}

// tanh((s+t)/2) = (tanh(s/2) + tanh(t/2)) / (1 + tanh(s/2) tanh(t/2)), so
// a_s # a_t = a_{s+t} for a_t = (1 + tanh(t/2)) e^{-tanh(t/2)(x^2 + xi^2)}.
inline cplx mehler(double t, double x, double xi) {
    const double l = std::tanh(0.5 * t);
    return (1.0 + l) * std::exp(-l * (x * x + xi * xi));
}

}  // namespace oracle
