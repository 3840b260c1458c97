#include "wcl/symbol.hpp"

#include <cmath>

#include "wcl/errors.hpp"
#include "wcl/fourier.hpp"

namespace wcl {
namespace {

// (-sqrt l)^n H_n(sqrt l z) as a polynomial in l, evaluated directly.
cplx gauss_poly(cplx l, double z, int n) {
    const cplx r = std::sqrt(l);
    const cplx y = r * z;
    cplx h0 = 1.0, h1 = 2.0 * y;
    if (n == 0) return 1.0;
    for (int k = 1; k < n; ++k) {
        cplx h2 = 2.0 * y * h1 - 2.0 * static_cast<double>(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    cplx s = 1.0;
    for (int k = 0; k < n; ++k) s *= -r;
    return s * h1;
}

double spectral_radius_hint(const WeylBackend& bk) {
    if (auto* h = dynamic_cast<const HermiteBackend*>(&bk)) return h->q_radius();
    if (auto* s = dynamic_cast<const SkewedBackend*>(&bk)) return spectral_radius_hint(s->base());
    if (auto* g = dynamic_cast<const GaussianPairBackend*>(&bk)) return 0.5 * g->grid().extent();
    return 20.0;
}

}  // namespace

cplx GaussianSymbolParams::hat(double u, double v) const {
    return c / (2.0 * lambda) * std::exp(-(u * u + v * v) / (4.0 * lambda));
}

Field sample(const Symbol& a, const PhaseGrid& g) {
    if (const auto* f = std::get_if<Field>(&a)) {
        if (f->space != Space::phase || f->phase_grid() != g) throw ShapeError("symbol field is not on the requested phase grid");
        return *f;
    }
    const auto& p = std::get<GaussianSymbolParams>(a);
    return sample_phase(g, [&](double x, double xi) { return p(x, xi); });
}

Field sample_fn(const SymbolFn& a, const PhaseGrid& g) {
    return sample_phase(g, [&](double x, double xi) { return a(x, xi); });
}

Field gaussian_derivative(const GaussianSymbolParams& p, const PhaseGrid& g, int alpha, int beta) {
    if (alpha < 0 || beta < 0) throw UnsupportedOrder("negative derivative order");
    const int N = g.N();
    std::vector<cplx> dx(static_cast<std::size_t>(N)), dxi(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        const double z = g.axis.point(k);
        const cplx e = std::exp(-p.lambda * z * z);
        dx[k] = gauss_poly(p.lambda, z, beta) * e;
        dxi[k] = gauss_poly(p.lambda, z, alpha) * e;
    }
    Field out = Field::zeros(g);
    for (int k = 0; k < N; ++k)
        for (int m = 0; m < N; ++m) out.at(k, m) = p.c * dx[k] * dxi[m];
    return out;
}

SpectralSet spectral_set(const Field& a) {
    if (a.space != Space::phase) throw ShapeError("spectral_set: symbol must be a phase field");
    const PhaseGrid g = a.phase_grid();
    const Field ah = dft_centered(a);
    const int N = g.N();
    SpectralSet s;
    s.reserve(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) {
        SpectralColumn col;
        col.v = g.axis.point(n);
        col.u.reserve(static_cast<std::size_t>(N));
        col.w.reserve(static_cast<std::size_t>(N));
        for (int m = 0; m < N; ++m) {
            col.u.push_back(g.axis.point(m));
            col.w.push_back(ah.at(m, n) / static_cast<double>(N));
        }
        s.push_back(std::move(col));
    }
    return s;
}

SpectralSet spectral_set(const GaussianSymbolParams& p, double q_max) {
    if (p.lambda.real() <= 0.0) throw DomainError("Gaussian symbol needs Re lambda > 0");
    const double decay = (1.0 / (4.0 * p.lambda)).real();
    const double amp = std::abs(p.c / (2.0 * p.lambda));
    const double R = amp > 1e-17 ? std::sqrt(std::log(amp / 1e-17) / decay) : 0.0;
    const double period = q_max + 0.5 * R + std::sqrt(42.0 / p.lambda.real());
    const double du = 2.0 * kPi / period;
    const int J = static_cast<int>(std::ceil(R / du));
    const double weight = du * du / (2.0 * kPi);

    SpectralSet s;
    s.reserve(static_cast<std::size_t>(2 * J + 1));
    for (int n = -J; n <= J; ++n) {
        SpectralColumn col;
        col.v = n * du;
        for (int m = -J; m <= J; ++m) {
            const double u = m * du;
            col.u.push_back(u);
            col.w.push_back(weight * p.hat(u, col.v));
        }
        s.push_back(std::move(col));
    }
    return s;
}

SpectralSet spectral_set_for(const WeylBackend& bk, const Symbol& a) {
    if (const auto* f = std::get_if<Field>(&a)) {
        if (f->space != Space::phase) throw ShapeError("symbol must be a phase field");
        if (auto g = bk.phase_grid(); g && *g != f->phase_grid())
            throw ShapeError("symbol grid does not match the backend lattice");
        return spectral_set(*f);
    }
    const auto& p = std::get<GaussianSymbolParams>(a);
    if (auto g = bk.phase_grid()) return spectral_set(sample(a, *g));
    return spectral_set(p, spectral_radius_hint(bk));
}

}  // namespace wcl
