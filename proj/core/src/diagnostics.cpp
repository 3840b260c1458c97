#include "wcl/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "wcl/calculus.hpp"
#include "wcl/errors.hpp"
#include "wcl/fourier.hpp"
#include "wcl/linalg.hpp"

namespace wcl {
namespace {

std::string tag(double v) { return format_double(v); }

double spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi / *lo;
}

}  // namespace

// --- t L P(t) ---------------------------------------------------------------

double tlp_actual(double t, int* n_star) {
    if (!(t > 0.0)) throw DomainError("tlp_actual: t must be positive");
    const double r = 1.0 / t;
    double best = 0.0;
    int arg = 1;
    for (double cand : {std::floor(r), std::ceil(r)}) {
        const double n = std::max(1.0, cand);
        const double v = t * n * std::exp(-t * n);
        if (v > best) {
            best = v;
            arg = static_cast<int>(n);
        }
    }
    if (n_star) *n_star = arg;
    return best;
}

double tlp_bound(double t, int d) { return std::pow(2.0, d + 2) * d * (1.0 + t) * std::exp(-t); }

VerificationReport tlp_bound_check(std::span<const double> ts, const HermiteBackend* cross) {
    VerificationReport rep;
    double worst_hermite = 0.0;
    for (double t : ts) {
        int n_star = 0;
        const double actual = tlp_actual(t, &n_star);
        const double bound = tlp_bound(t);
        const std::string k = "t" + tag(t);
        rep.set(k + ".n_star", n_star);
        rep.set(k + ".actual", actual);
        rep.set(k + ".bound", bound);
        rep.set(k + ".margin", bound / actual);
        rep.check(k + ".actual_over_bound", actual / bound, 1.0);
        if (cross) {
            const auto K = cross->trusted_dim();
            const Matrix T = t * (cross->L() * quantize(*cross, mehler_symbol(t)));
            const double measured = operator_norm_dense(T.topLeftCorner(K, K));
            double expect = 0.0;
            for (Eigen::Index n = 0; n < K; ++n) expect = std::max(expect, t * n * std::exp(-t * n));
            worst_hermite = std::max(worst_hermite, std::abs(measured - expect));
        }
    }
    if (cross) rep.check("hermite_block_deviation", worst_hermite, 1e-6);
    return rep;
}

// --- sector geometry ----------------------------------------------------------

SectorFit sector_lambda_fit(double theta, int n_samples) {
    SectorFit fit;
    fit.theta = theta;
    fit.min_re_lambda = std::numeric_limits<double>::infinity();
    const double w = 0.5 * kPi - theta;
    for (int i = 0; i < n_samples; ++i) {
        const double r = std::pow(10.0, -3.0 + 6.0 * i / std::max(1, n_samples - 1));
        for (double sgn : {1.0, -1.0}) {
            const cplx z = std::polar(r, sgn * theta);
            const cplx l = lambda_of(z);
            fit.C1 = std::max(fit.C1, w / std::cos(std::arg(l)));
            fit.C2 = std::max(fit.C2, std::abs(l) * w);
            fit.min_re_lambda = std::min(fit.min_re_lambda, l.real());
            ++fit.samples;
        }
    }
    return fit;
}

DominationFit domination_fit(double theta, int n_samples, double box) {
    DominationFit fit;
    fit.theta = theta;
    const double w2 = std::pow(0.5 * kPi - theta, 2);
    const int grid = 9;
    double C_big = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double r = std::pow(10.0, -3.0 + 6.0 * i / std::max(1, n_samples - 1));
        for (double sgn : {1.0, -1.0}) {
            const cplx z = std::polar(r, sgn * theta);
            const GaussianSymbolParams a = mehler_symbol(z);
            const double t = 1.0 / (1.0 / a.lambda).real();
            // ratio = w^2 |ahat| / b_t; the Gaussians are compared through their
            // logarithms so that far samples do not underflow.
            auto ratio = [&](double y, double eta) {
                const double q = y * y + eta * eta;
                const double log_ahat = std::log(std::abs(a.c / (2.0 * a.lambda))) - (q / (4.0 * a.lambda)).real();
                const double log_b = -std::log(t) - q / (4.0 * t);
                return w2 * std::exp(log_ahat - log_b);
            };
            const double r0 = ratio(0.0, 0.0);
            fit.C = std::max(fit.C, r0);
            for (int iy = -grid; iy <= grid; ++iy)
                for (int ie = -grid; ie <= grid; ++ie) {
                    const double y = box * iy / grid, eta = box * ie / grid;
                    fit.max_modulus_deviation = std::max(fit.max_modulus_deviation, std::abs(ratio(y, eta) / r0 - 1.0));
                    C_big = std::max(C_big, ratio(2.0 * y, 2.0 * eta));
                }
            ++fit.samples;
        }
    }
    fit.C_growth = C_big / fit.C;
    return fit;
}

VerificationReport sector_report(std::span<const double> thetas, int n_samples, double spread_limit) {
    VerificationReport rep;
    std::vector<double> c1, c2;
    double min_re = std::numeric_limits<double>::infinity();
    for (double th : thetas) {
        const auto f = sector_lambda_fit(th, n_samples);
        const std::string k = "theta" + tag(th);
        rep.set(k + ".C1", f.C1);
        rep.set(k + ".C2", f.C2);
        rep.set(k + ".min_re_lambda", f.min_re_lambda);
        c1.push_back(f.C1);
        c2.push_back(f.C2);
        min_re = std::min(min_re, f.min_re_lambda);
    }
    rep.require("re_lambda_positive", min_re > 0.0);
    rep.require("constants_finite", std::all_of(c1.begin(), c1.end(), [](double v) { return std::isfinite(v); }) &&
                                        std::all_of(c2.begin(), c2.end(), [](double v) { return std::isfinite(v); }));
    rep.check("C1_spread", spread(c1), spread_limit);
    rep.check("C2_spread", spread(c2), spread_limit);
    return rep;
}

VerificationReport domination_report(std::span<const double> thetas, int n_samples, double box, double spread_limit) {
    VerificationReport rep;
    std::vector<double> cs;
    double dev = 0.0, growth = 0.0;
    for (double th : thetas) {
        const auto f = domination_fit(th, n_samples, box);
        const std::string k = "theta" + tag(th);
        rep.set(k + ".C", f.C);
        cs.push_back(f.C);
        dev = std::max(dev, f.max_modulus_deviation);
        growth = std::max(growth, f.C_growth);
    }
    rep.require("C_finite", std::all_of(cs.begin(), cs.end(), [](double v) { return std::isfinite(v); }));
    rep.check("modulus_deviation", dev, 1e-10);
    rep.check_le("box_doubling_growth", growth, 1.0 + 1e-12);
    rep.set("C_sup", *std::max_element(cs.begin(), cs.end()));
    rep.check("C_spread", spread(cs), spread_limit);
    return rep;
}

// --- square function ----------------------------------------------------------

namespace {

// E||sum eps_j v_j||^2 = sum ||v_j||^2, and its Monte Carlo estimate via the
// Gram matrix.
SquareFunction rademacher_moment(const std::vector<Vector>& delta, int draws, std::uint64_t seed) {
    const auto n = static_cast<Eigen::Index>(delta.size());
    Eigen::MatrixXd G(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k) G(i, k) = delta[i].dot(delta[k]).real();
    SquareFunction out;
    out.exact = G.trace();
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    Eigen::VectorXd eps(n);
    double acc = 0.0;
    for (int d = 0; d < draws; ++d) {
        for (Eigen::Index i = 0; i < n; ++i) eps[i] = coin(rng) ? 1.0 : -1.0;
        acc += eps.dot(G * eps);
    }
    out.mc = acc / draws;
    return out;
}

}  // namespace

SquareFunction square_function(const HermiteBackend& bk, double s, int J, const Vector& f, int draws,
                               std::uint64_t seed) {
    std::vector<Vector> pf;
    for (int j = -J; j <= J + 1; ++j) pf.push_back(semigroup_apply(bk, std::ldexp(s, j), f));
    std::vector<Vector> delta;
    for (std::size_t i = 0; i + 1 < pf.size(); ++i) delta.push_back(pf[i + 1] - pf[i]);
    SquareFunction out = rademacher_moment(delta, draws, seed);
    out.norm2 = f.squaredNorm();
    return out;
}

Vector random_low_mode(const HermiteBackend& bk, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Vector f = Vector::Zero(bk.state_dim());
    for (Eigen::Index n = 0; n < bk.trusted_dim(); ++n) {
        const double re = nd(rng), im = nd(rng);
        f[n] = cplx(re, im);
    }
    return f / f.norm();
}

VerificationReport square_function_check(const HermiteBackend& bk, std::span<const double> s_list, int J,
                                         int n_fields, int draws, std::uint64_t seed) {
    VerificationReport rep;
    double worst_ratio = 0.0, worst_mc = 0.0;
    for (double s : s_list) {
        // P(2^j s) once per s, shared by all fields.
        std::vector<Matrix> P;
        for (int j = -J; j <= J + 1; ++j) P.push_back(quantize(bk, mehler_symbol(std::ldexp(s, j))));
        for (int i = 0; i < n_fields; ++i) {
            const Vector f = random_low_mode(bk, seed + static_cast<std::uint64_t>(i));
            std::vector<Vector> delta;
            for (std::size_t j = 0; j + 1 < P.size(); ++j) delta.push_back(P[j + 1] * f - P[j] * f);
            const auto sf = rademacher_moment(delta, draws, seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
            const double exact = sf.exact, mc = sf.mc;
            worst_ratio = std::max(worst_ratio, exact / f.squaredNorm());
            if (exact > 0.0) worst_mc = std::max(worst_mc, std::abs(mc - exact) / exact);
        }
    }
    rep.set("fields", n_fields);
    rep.set("draws", draws);
    rep.set("J", J);
    rep.check_le("max_exact_over_norm2", worst_ratio, 1.0);
    rep.check("max_mc_relative_deviation", worst_mc, 0.05);
    return rep;
}

// --- dyadic symbols ------------------------------------------------------------

std::vector<GaussianSymbolParams> dyadic_terms(std::span<const int> eps, double s) {
    std::vector<GaussianSymbolParams> out;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        const double t = std::ldexp(s, -static_cast<int>(j + 1));
        out.push_back({static_cast<double>(eps[j]), lambda_of(t)});
    }
    return out;
}

double dyadic_seminorm(const PhaseGrid& g, std::span<const int> eps, double s, int m, int min_order) {
    const auto terms = dyadic_terms(eps, s);
    double best = 0.0;
    for (int alpha = 0; alpha <= m; ++alpha)
        for (int beta = 0; beta <= m; ++beta) {
            if (alpha + beta < min_order) continue;
            Field sum = Field::zeros(g);
            for (const auto& p : terms) {
                const Field d = gaussian_derivative(p, g, alpha, beta);
                for (std::size_t i = 0; i < sum.size(); ++i) sum.values[i] += d.values[i];
            }
            for (int k = 0; k < g.N(); ++k)
                for (int mm = 0; mm < g.N(); ++mm) {
                    const double xi = g.axis.point(mm);
                    best = std::max(best, std::pow(1.0 + xi * xi, 0.5 * alpha) * std::abs(sum.at(k, mm)));
                }
        }
    return best;
}

double telescoped_sup(const PhaseGrid& g, std::span<const int> eps, double s) {
    double best = 0.0;
    for (int k = 0; k < g.N(); ++k)
        for (int m = 0; m < g.N(); ++m) {
            const double x = g.axis.point(k), xi = g.axis.point(m);
            const double r2 = x * x + xi * xi;
            double acc = 0.0;
            for (std::size_t j = 0; j < eps.size(); ++j) {
                const double t = std::ldexp(s, -static_cast<int>(j + 1));
                acc += eps[j] * (std::exp(-lambda_of(2.0 * t).real() * r2) - std::exp(-lambda_of(t).real() * r2));
            }
            best = std::max(best, std::abs(acc));
        }
    return best;
}

VerificationReport dyadic_symbol_uniformity(const PhaseGrid& g, std::span<const int> k_list, int trials,
                                            std::span<const double> s_list, std::uint64_t seed) {
    VerificationReport rep;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    double sup5 = 0.0, sup_all = 0.0, sup5_0 = 0.0, sup_all_0 = 0.0, tele = 0.0;
    for (int k : k_list) {
        double sup_k = 0.0;
        for (double s : s_list) {
            std::vector<std::vector<int>> signs(1, std::vector<int>(static_cast<std::size_t>(k), 1));
            for (int tr = 0; tr < trials; ++tr) {
                std::vector<int> e(static_cast<std::size_t>(k));
                for (auto& v : e) v = coin(rng) ? 1 : -1;
                signs.push_back(std::move(e));
            }
            for (const auto& e : signs) {
                const double v = dyadic_seminorm(g, e, s, 2, 1);
                const double v0 = dyadic_seminorm(g, e, s, 2, 0);
                sup_k = std::max(sup_k, v);
                sup_all = std::max(sup_all, v);
                sup_all_0 = std::max(sup_all_0, v0);
                if (k <= 5) {
                    sup5 = std::max(sup5, v);
                    sup5_0 = std::max(sup5_0, v0);
                }
                tele = std::max(tele, telescoped_sup(g, e, s));
            }
        }
        rep.set("k" + std::to_string(k) + ".sup", sup_k);
    }
    rep.set("sup_k_le_5", sup5);
    rep.set("sup_all_k", sup_all);
    rep.check("uniformity_ratio", sup_all / sup5, 1.25);
    // Order (0,0) included: |kappa| itself grows like k at the origin.
    rep.set("with_order0.sup_k_le_5", sup5_0);
    rep.set("with_order0.sup_all_k", sup_all_0);
    rep.set("with_order0.ratio", sup_all_0 / sup5_0);
    rep.check_le("telescoped_sup", tele, 1.0 + 1e-9);
    return rep;
}

// --- Mehler spectrum and symbol derivatives -----------------------------------

double mehler_eigencheck(const HermiteBackend& bk, std::span<const cplx> ts) {
    double worst = 0.0;
    for (cplx t : ts) {
        const Matrix M = quantize(bk, mehler_symbol(t));
        for (Eigen::Index n = 0; n < bk.trusted_dim(); ++n) {
            const Vector e = bk.mode(static_cast<int>(n));
            worst = std::max(worst, (M * e - std::exp(-t * static_cast<double>(n)) * e).norm());
        }
    }
    return worst;
}

VerificationReport polynomial_derivative_check(const PhaseGrid& g, int alpha, int beta, std::span<const double> lambdas,
                                               double tol) {
    VerificationReport rep;
    const int N = g.N();
    const int H = N / 2;
    const double q = g.axis.extent() / 4.0;
    double scaling = 0.0, closed = 0.0;
    for (double l : lambdas) {
        const GaussianSymbolParams p1{1.0, l}, p4{1.0, 4.0 * l};
        const Field d1 = spectral_derivative(sample(p1, g), alpha, beta);
        const Field d4 = spectral_derivative(sample(p4, g), alpha, beta);
        const Field ref = gaussian_derivative(p1, g, alpha, beta);
        const double factor = std::ldexp(1.0, alpha + beta);
        for (int k = 0; k < N; ++k)
            for (int m = 0; m < N; ++m) {
                if (std::abs(g.axis.point(k)) > q || std::abs(g.axis.point(m)) > q) continue;
                closed = std::max(closed, std::abs(d1.at(k, m) - ref.at(k, m)));
                if ((k - H) % 2 != 0 || (m - H) % 2 != 0) continue;
                const int k2 = H + (k - H) / 2, m2 = H + (m - H) / 2;
                scaling = std::max(scaling, std::abs(d4.at(k2, m2) - factor * d1.at(k, m)));
            }
    }
    rep.set("alpha", alpha);
    rep.set("beta", beta);
    rep.check("scaling_residual", scaling, tol);
    rep.check("closed_form_residual", closed, tol);
    return rep;
}

// --- Gaussian pair -------------------------------------------------------------

VerificationReport gaussian_pair_growth(const GaussianPairBackend& bk, std::span<const double> ts) {
    VerificationReport rep;
    double dev2 = 0.0;
    std::vector<double> p4;
    for (double t : ts) {
        const Matrix A = bk.group_A(t);
        const Matrix B = bk.group_B(t);
        const double a2 = bk.state_norm(A, 2), b2 = bk.state_norm(B, 2), b4 = bk.state_norm(B, 4);
        const std::string k = "t" + tag(t);
        rep.set(k + ".p2_A", a2);
        rep.set(k + ".p2_B", b2);
        rep.set(k + ".p4_B", b4);
        dev2 = std::max({dev2, std::abs(a2 - 1.0), std::abs(b2 - 1.0)});
        p4.push_back(b4);
    }
    bool increasing = true;
    for (std::size_t i = 0; i + 1 < p4.size(); ++i)
        if (!(p4[i + 1] > p4[i])) increasing = false;
    rep.check("p2_deviation", dev2, 1e-8);
    rep.require("p4_strictly_increasing", increasing);
    if (!p4.empty()) rep.set("p4_last_over_first", p4.back() / p4.front());
    return rep;
}

}  // namespace wcl
