#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "wcl/pairs.hpp"
#include "wcl/report.hpp"
#include "wcl/symbol.hpp"

namespace wcl {

// a(A,B) = (1/N) sum ahat(u, v) e^{i(uA + vB)} over the backend's quadrature set.
Matrix quantize(const WeylBackend& bk, const Symbol& a);

// tanh(z/2); z = 0 gives 0.
cplx lambda_of(cplx z);

// c = (1 + lambda_z)^d, lambda = lambda_z.
GaussianSymbolParams mehler_symbol(cplx z, int d = 1);

// quantize(bk, mehler(t)) f.
Vector semigroup_apply(const WeylBackend& bk, double t, const Vector& f);

// ||(f - P(h) f)/h - L f|| on the hermite backend.
double generator_residual(const HermiteBackend& bk, const Vector& f, double h);

// a_40(A,B); e^{-40} is below double precision next to 1.
Matrix ground_projection(const WeylBackend& bk);

// Normalized Hermite functions sampled on the grid, scaled by sqrt(h) so the
// columns are orthonormal in C^N up to tail truncation.
Matrix hermite_lift(const StateGrid& g, int count);

struct SeminormReport {
    int N = 0;
    int m = 0;
    double value = 0.0;
};

// max over alpha, beta <= m (each) of sup <xi>^{N + alpha} |d_xi^alpha d_x^beta a|.
// Pairs with alpha + beta < min_order are skipped. m <= 3.
SeminormReport seminorm(const Field& a, int N, int m, int min_order = 0);
SeminormReport seminorm(const GaussianSymbolParams& p, const PhaseGrid& g, int N, int m, int min_order = 0);

// ||quantize(a)|| / seminorm(a, N, m) per symbol and the max over the family.
VerificationReport calculus_boundedness_ratio(const WeylBackend& bk, std::span<const Field> family, int N, int m);

// Smooth radial cutoff: 1 on r <= r0, 0 on r >= r1.
SymbolFn plateau_bump(double r0, double r1);

struct SweepResult {
    std::vector<double> errors;  // ||eta_{1/k}(A,B) f - f|| per k
    VerificationReport report;
};

// eta_{1/k}(x, xi) = eta(x/k, xi/k) sampled on g.
SweepResult approx_identity_sweep(const WeylBackend& bk, const PhaseGrid& g, const SymbolFn& eta,
                                  std::span<const int> ks, const Vector& f);

struct S0Extension {
    Vector value;                     // a_{n_last}(A,B) f
    std::vector<double> increments;   // ||a_{n_{i+1}} f - a_{n_i} f||
    VerificationReport report;
};

// a_n(x, xi) = a(x, xi) eta(x/n, xi/n).
S0Extension s0_extend(const WeylBackend& bk, const PhaseGrid& g, const SymbolFn& a, const SymbolFn& eta,
                      std::span<const int> ns, const Vector& f);

// "gaussian:c,lambda", "mehler:t,d" or a path to a WCLFIELD phase file.
Symbol parse_symbol(std::string_view spec);

}  // namespace wcl
