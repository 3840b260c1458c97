#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wcl/pairs.hpp"
#include "wcl/report.hpp"
#include "wcl/symbol.hpp"

namespace wcl {

// --- t L P(t) ---------------------------------------------------------------

// t max_n n e^{-tn}, attained at n = floor(1/t) or ceil(1/t) (n >= 1).
double tlp_actual(double t, int* n_star = nullptr);
// 2^{d+2} d (1 + t) e^{-t}
double tlp_bound(double t, int d = 1);

// Exact eigenbasis values against the bound; with a hermite backend, also
// ||t L P(t)|| on the trusted block against t max_{n <= n_max-4} n e^{-tn}.
VerificationReport tlp_bound_check(std::span<const double> ts, const HermiteBackend* cross = nullptr);

// --- sector geometry ----------------------------------------------------------

struct SectorFit {
    double theta = 0.0;
    double C1 = 0.0;  // max (pi/2 - theta) / cos(arg lambda_z)
    double C2 = 0.0;  // max |lambda_z| (pi/2 - theta)
    double min_re_lambda = 0.0;
    int samples = 0;
};

// z = r e^{+-i theta}, r log-spaced in [1e-3, 1e3].
SectorFit sector_lambda_fit(double theta, int n_samples);

struct DominationFit {
    double theta = 0.0;
    double C = 0.0;                      // max over z of the ratio at the origin
    double max_modulus_deviation = 0.0;  // max |ratio(y,eta)/ratio(0,0) - 1|
    double C_growth = 0.0;               // max ratio over a box twice as large, over C
    int samples = 0;
};

// ratio(y,eta) = (pi/2 - theta)^2 |ahat_z(y,eta)| / b_t(y,eta), t = 1/Re(1/lambda_z), d = 1.
DominationFit domination_fit(double theta, int n_samples, double box);

// Fits over the thetas; spreads max/min across theta are checked against `spread`.
VerificationReport sector_report(std::span<const double> thetas, int n_samples, double spread = 4.0);
VerificationReport domination_report(std::span<const double> thetas, int n_samples, double box,
                                     double spread = 4.0);

// --- square function ----------------------------------------------------------

struct SquareFunction {
    double exact = 0.0;   // sum_j ||Delta_j f||^2
    double mc = 0.0;      // mean of ||sum_j eps_j Delta_j f||^2 over sign draws
    double norm2 = 0.0;   // ||f||^2
};

// Delta_j = P(2^{j+1} s) - P(2^j s), j = -J..J, P(t) = quantize(a_t).
SquareFunction square_function(const HermiteBackend& bk, double s, int J, const Vector& f, int draws,
                               std::uint64_t seed);

// Random low-mode state (modes n <= n_max - 4), unit norm.
Vector random_low_mode(const HermiteBackend& bk, std::uint64_t seed);

VerificationReport square_function_check(const HermiteBackend& bk, std::span<const double> s_list, int J,
                                         int n_fields, int draws, std::uint64_t seed);

// --- dyadic symbols ------------------------------------------------------------

// kappa(x, xi) = sum_{j=1}^k eps_j e^{-lambda_{2^{-j} s} (x^2 + xi^2)}.
std::vector<GaussianSymbolParams> dyadic_terms(std::span<const int> eps, double s);

// Seminorm of kappa with closed-form derivatives; orders alpha, beta <= m,
// alpha + beta >= min_order.
double dyadic_seminorm(const PhaseGrid& g, std::span<const int> eps, double s, int m, int min_order);

// max |sum_j eps_j (e^{-lambda_{2t} r^2} - e^{-lambda_t r^2})|, t = 2^{-j} s.
double telescoped_sup(const PhaseGrid& g, std::span<const int> eps, double s);

// Uniformity in k of the derivative seminorm (orders 1..2), telescoped bound.
VerificationReport dyadic_symbol_uniformity(const PhaseGrid& g, std::span<const int> k_list, int trials,
                                            std::span<const double> s_list, std::uint64_t seed);

// --- Mehler spectrum and symbol derivatives -----------------------------------

// max over n <= n_max - 4 and t of ||a_t(A,B) h_n - e^{-tn} h_n||.
double mehler_eigencheck(const HermiteBackend& bk, std::span<const cplx> ts);

// d_xi^alpha d_x^beta e^{-l(x^2+xi^2)} computed spectrally at l and 4l: the
// sample at (x/2, xi/2) for 4l equals 2^{alpha+beta} times the sample at (x, xi)
// for l. Interior samples |x|, |xi| <= L/4. Also compared with the closed form.
VerificationReport polynomial_derivative_check(const PhaseGrid& g, int alpha, int beta,
                                               std::span<const double> lambdas, double tol = 1e-6);

// --- Gaussian pair -------------------------------------------------------------

// p = 2 norms of e^{itA}, e^{itB} (all 1) and p = 4 norms of e^{itB} (growing).
VerificationReport gaussian_pair_growth(const GaussianPairBackend& bk, std::span<const double> ts);

}  // namespace wcl
