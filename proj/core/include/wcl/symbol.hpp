#pragma once

#include <functional>
#include <variant>

#include "wcl/grid.hpp"
#include "wcl/pairs.hpp"

namespace wcl {

// a(x, xi) = c e^{-lambda (|x|^2 + |xi|^2)}, Re lambda > 0, d = 1.
struct GaussianSymbolParams {
    cplx c{1.0, 0.0};
    cplx lambda{1.0, 0.0};

    cplx operator()(double x, double xi) const { return c * std::exp(-lambda * (x * x + xi * xi)); }
    // Closed-form transform c / (2 lambda) e^{-(u^2 + v^2) / (4 lambda)}.
    cplx hat(double u, double v) const;
};

using Symbol = std::variant<Field, GaussianSymbolParams>;
using SymbolFn = std::function<cplx(double, double)>;

Field sample(const Symbol& a, const PhaseGrid& g);
Field sample_fn(const SymbolFn& a, const PhaseGrid& g);

// d^alpha/dxi^alpha d^beta/dx^beta of the Gaussian in closed form, through
// d^n/dz^n e^{-l z^2} = (-sqrt l)^n H_n(sqrt l z) e^{-l z^2}.
Field gaussian_derivative(const GaussianSymbolParams& p, const PhaseGrid& g, int alpha, int beta);

// Quadrature set on the lattice of a's phase grid: weights ahat / N.
SpectralSet spectral_set(const Field& a);

// Quadrature set for a closed-form Gaussian on an adaptive square lattice:
// |ahat| < 1e-17 outside the box, and the lattice step is fine enough that the
// periodized sum does not alias over spectra in [-q_max, q_max].
SpectralSet spectral_set(const GaussianSymbolParams& p, double q_max);

// Quadrature set matched to the backend: its phase grid when it has one,
// otherwise the adaptive lattice for Gaussians.
SpectralSet spectral_set_for(const WeylBackend& bk, const Symbol& a);

}  // namespace wcl
