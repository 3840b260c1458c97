#include "wcl/moyal.hpp"

#include <algorithm>
#include <cmath>

#include "wcl/errors.hpp"
#include "wcl/fourier.hpp"
#include "wcl/twisted.hpp"

namespace wcl {
namespace {

constexpr cplx I{0.0, 1.0};

void require_phase_pair(const Field& a, const Field& b, const char* what) {
    if (a.space != Space::phase || b.space != Space::phase) throw ShapeError(std::string(what) + ": phase fields expected");
    require_same_grid(a, b, what);
}

}  // namespace

GaussianSymbolParams moyal_gaussian(const GaussianSymbolParams& p, const GaussianSymbolParams& q) {
    if (p.lambda.real() <= 0.0 || q.lambda.real() <= 0.0) throw DomainError("moyal_gaussian: Re lambda must be positive");
    const cplx den = 1.0 + p.lambda * q.lambda;
    return {p.c * q.c / den, (p.lambda + q.lambda) / den};
}

Field moyal_fft(const Field& a, const Field& b) {
    require_phase_pair(a, b, "moyal_fft");
    return idft_centered(twisted_convolve(dft_centered(a), dft_centered(b), Wrap::zero));
}

Field moyal_expansion(const Field& a, const Field& b, int M) {
    require_phase_pair(a, b, "moyal_expansion");
    if (M < 0 || M > 3) throw UnsupportedOrder("moyal_expansion: M must be in 0..3");
    Field out = Field::zeros(a.phase_grid());
    cplx coeff = 1.0;  // (1/alpha!) (1/i)^alpha
    for (int alpha = 0; alpha <= M; ++alpha) {
        if (alpha > 0) coeff *= -I / static_cast<double>(alpha);
        const Field da = spectral_derivative(a, alpha, 0);
        const Field db = spectral_derivative(b, 0, alpha);
        for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += coeff * da.values[i] * db.values[i];
    }
    return out;
}

RemainderFit remainder_decay(const Field& a, const Field& b, int M) {
    const Field full = moyal_fft(a, b);
    const Field part = moyal_expansion(a, b, M);
    const PhaseGrid g = a.phase_grid();
    const int N = g.N();

    RemainderFit fit;
    std::vector<double> env(static_cast<std::size_t>(N), 0.0);
    for (int k = 0; k < N; ++k)
        for (int m = 0; m < N; ++m) {
            const double r = std::abs(full.at(k, m) - part.at(k, m));
            env[m] = std::max(env[m], r);
            fit.max_abs = std::max(fit.max_abs, r);
        }

    constexpr double kFloor = 1e-13;
    const double xi_max = g.axis.extent() / 2.0;
    std::vector<double> lx, ly;
    for (int m = 0; m < N; ++m) {
        const double xi = std::abs(g.axis.point(m));
        if (xi < 2.0 || xi > xi_max / 2.0 || env[m] < kFloor) continue;
        lx.push_back(0.5 * std::log1p(xi * xi));
        ly.push_back(std::log(env[m]));
    }
    fit.samples = static_cast<int>(lx.size());
    if (fit.max_abs < kFloor || lx.size() < 3) {
        fit.machine_precision = true;
        return fit;
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.beta = -slope;
    fit.C = std::exp((sy - slope * sx) / n);
    return fit;
}

Field kn_symbol(const Field& a, double factor) {
    if (a.space != Space::phase) throw ShapeError("kn_symbol: phase field expected");
    const Field mixed = spectral_derivative(a, 1, 1);
    Field b = a;
    for (std::size_t i = 0; i < b.size(); ++i) b.values[i] += -I * factor * mixed.values[i];
    return b;
}

Matrix kn_matrix(const Field& b) {
    if (b.space != Space::phase) throw ShapeError("kn_matrix: phase field expected");
    const int N = b.grid.N;
    const int H = N / 2;
    // xi_m (x_k - x_j) = 2 pi cm (ck - cj) / N
    std::vector<cplx> tab(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) tab[j] = std::exp(I * (2.0 * kPi * j / N));
    Matrix K = Matrix::Zero(N, N);
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) {
            cplx acc = 0.0;
            for (int m = 0; m < N; ++m) {
                const long long p = static_cast<long long>(m - H) * (k - j);
                acc += b.at(k, m) * tab[static_cast<std::size_t>(((p % N) + N) % N)];
            }
            K(k, j) = acc / static_cast<double>(N);
        }
    return K;
}

Vector kn_apply(const Field& b, const Vector& f) {
    if (b.space != Space::phase) throw ShapeError("kn_apply: phase field expected");
    const int N = b.grid.N;
    if (f.size() != N) throw ShapeError("kn_apply: state length mismatch");
    const StateGrid g{1, N, b.grid.h};
    Field fs = Field::zeros(g);
    fs.vec() = f;
    const Field fh = dft_centered(fs);
    Vector out(N);
    const double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (int k = 0; k < N; ++k) {
        cplx acc = 0.0;
        for (int m = 0; m < N; ++m) acc += b.at(k, m) * fh.values[m] * std::exp(I * g.point(k) * g.point(m));
        out[k] = s * acc;
    }
    return out;
}

double KernelBounds::schur() const { return std::sqrt(row * col); }

KernelBounds kernel_bounds(const Field& r) {
    const Matrix K = kn_matrix(r);
    KernelBounds kb;
    kb.row = K.cwiseAbs().rowwise().sum().maxCoeff();
    kb.col = K.cwiseAbs().colwise().sum().maxCoeff();
    return kb;
}

}  // namespace wcl
