#include "wcl/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "wcl/errors.hpp"

namespace wcl {
namespace {

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n)
        : ptr(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
        if (!ptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(ptr); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* ptr;
};

// The planner is not thread safe; plans are cached and reused via the
// new-array execute interface, which is.
class PlanCache {
public:
    fftw_plan get(int N, int axes, bool inverse) {
        std::lock_guard lock(mu_);
        auto key = std::make_tuple(N, axes, inverse);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::size_t n = axes == 1 ? N : static_cast<std::size_t>(N) * N;
        FftwBuffer buf(n);
        int sign = inverse ? FFTW_BACKWARD : FFTW_FORWARD;
        fftw_plan p = axes == 1 ? fftw_plan_dft_1d(N, buf.ptr, buf.ptr, sign, FFTW_ESTIMATE)
                                : fftw_plan_dft_2d(N, N, buf.ptr, buf.ptr, sign, FFTW_ESTIMATE);
        if (!p) throw Error("fftw planning failed");
        plans_.emplace(key, p);
        return p;
    }
    ~PlanCache() {
        for (auto& [k, p] : plans_) fftw_destroy_plan(p);
    }

private:
    std::mutex mu_;
    std::map<std::tuple<int, int, bool>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

}  // namespace

void dft_centered_inplace(cplx* data, int N, int axes, bool inverse) {
    if (axes != 1 && axes != 2) throw ShapeError("dft: axes must be 1 or 2");
    const std::size_t n = axes == 1 ? N : static_cast<std::size_t>(N) * N;
    fftw_plan plan = plan_cache().get(N, axes, inverse);
    FftwBuffer buf(n);
    auto* b = reinterpret_cast<cplx*>(buf.ptr);

    // x_k = (k - N/2) h: the centering turns into (-1)^k pre/post factors and
    // an overall e^{-i pi N / 2} per axis, which is +-1 for even N.
    const double axis_sign = (N % 4 == 0) ? 1.0 : -1.0;
    const double scale = std::pow(axis_sign, axes) / std::pow(std::sqrt(static_cast<double>(N)), axes);
    if (axes == 1) {
        for (int k = 0; k < N; ++k) b[k] = (k % 2 ? -data[k] : data[k]);
    } else {
        for (int k = 0; k < N; ++k)
            for (int m = 0; m < N; ++m) {
                std::size_t i = static_cast<std::size_t>(k) * N + m;
                b[i] = ((k + m) % 2 ? -data[i] : data[i]);
            }
    }
    fftw_execute_dft(plan, buf.ptr, buf.ptr);
    if (axes == 1) {
        for (int k = 0; k < N; ++k) data[k] = (k % 2 ? -b[k] : b[k]) * scale;
    } else {
        for (int k = 0; k < N; ++k)
            for (int m = 0; m < N; ++m) {
                std::size_t i = static_cast<std::size_t>(k) * N + m;
                data[i] = ((k + m) % 2 ? -b[i] : b[i]) * scale;
            }
    }
}

Field dft_centered(const Field& v) {
    if (v.values.size() != v.grid.size()) throw ShapeError("dft_centered: length does not match grid");
    Field out = v;
    dft_centered_inplace(out.values.data(), v.grid.N, v.grid.d, false);
    return out;
}

Field idft_centered(const Field& v) {
    if (v.values.size() != v.grid.size()) throw ShapeError("idft_centered: length does not match grid");
    Field out = v;
    dft_centered_inplace(out.values.data(), v.grid.N, v.grid.d, true);
    return out;
}

namespace detail {

Field spectral_derivative_any(const Field& a, int alpha, int beta) {
    if (alpha < 0 || beta < 0 || alpha > 8 || beta > 8) throw UnsupportedOrder("derivative order out of range");
    if (a.values.size() != a.grid.size()) throw ShapeError("spectral_derivative: length does not match grid");
    if (a.grid.d == 1 && alpha != 0) throw ShapeError("xi-derivative of a one-axis field");
    if (alpha == 0 && beta == 0) return a;

    const int N = a.grid.N;
    // (i u)^order with the Nyquist mode dropped for odd orders.
    auto multipliers = [&](int order) {
        std::vector<cplx> w(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            if (order % 2 == 1 && k == 0) {
                w[k] = 0.0;
                continue;
            }
            w[k] = ipow(cplx(0.0, a.grid.point(k)), order);
        }
        return w;
    };
    Field out = dft_centered(a);
    if (a.grid.d == 1) {
        auto w = multipliers(beta);
        for (int k = 0; k < N; ++k) out.values[k] *= w[k];
    } else {
        auto wx = multipliers(beta);
        auto wxi = multipliers(alpha);
        for (int k = 0; k < N; ++k)
            for (int m = 0; m < N; ++m) out.at(k, m) *= wx[k] * wxi[m];
    }
    return idft_centered(out);
}

}  // namespace detail

Field spectral_derivative(const Field& a, int alpha, int beta) {
    if (alpha + beta > 4) throw UnsupportedOrder("spectral_derivative supports total order <= 4");
    return detail::spectral_derivative_any(a, alpha, beta);
}

}  // namespace wcl
