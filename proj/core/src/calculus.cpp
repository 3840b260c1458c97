#include "wcl/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcl/errors.hpp"
#include "wcl/fourier.hpp"
#include "wcl/io.hpp"
#include "wcl/linalg.hpp"

namespace wcl {

Matrix quantize(const WeylBackend& bk, const Symbol& a) { return bk.quantize_spectrum(spectral_set_for(bk, a)); }

cplx lambda_of(cplx z) {
    if (z.real() < 0.0) throw DomainError("lambda_of: Re z < 0");
    if (z == cplx(0.0)) return 0.0;
    return std::tanh(0.5 * z);
}

GaussianSymbolParams mehler_symbol(cplx z, int d) {
    if (z.real() <= 0.0) throw DomainError("mehler_symbol: Re z must be positive");
    if (d < 1) throw DomainError("mehler_symbol: d >= 1");
    const cplx l = lambda_of(z);
    return {std::pow(1.0 + l, d), l};
}

Vector semigroup_apply(const WeylBackend& bk, double t, const Vector& f) {
    if (!(t > 0.0)) throw DomainError("semigroup_apply: t must be positive");
    if (f.size() != bk.state_dim()) throw ShapeError("semigroup_apply: state length mismatch");
    return quantize(bk, mehler_symbol(t, bk.d())) * f;
}

double generator_residual(const HermiteBackend& bk, const Vector& f, double h) {
    const Vector Pf = semigroup_apply(bk, h, f);
    return ((f - Pf) / h - bk.L() * f).norm();
}

Matrix ground_projection(const WeylBackend& bk) { return quantize(bk, mehler_symbol(40.0, bk.d())); }

Matrix hermite_lift(const StateGrid& g, int count) {
    if (g.d != 1) throw ShapeError("hermite_lift expects a one-axis grid");
    Matrix H(g.N, count);
    const double s = std::sqrt(g.h);
    for (int k = 0; k < g.N; ++k) {
        const double x = g.point(k);
        double p0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
        double p1 = std::sqrt(2.0) * x * p0;
        for (int n = 0; n < count; ++n) {
            H(k, n) = s * p0;
            const double p2 = std::sqrt(2.0 / (n + 2)) * x * p1 - std::sqrt((n + 1.0) / (n + 2)) * p0;
            p0 = p1;
            p1 = p2;
        }
    }
    return H;
}

namespace {

double weighted_sup(const Field& d, const PhaseGrid& g, int weight_power) {
    double best = 0.0;
    for (int k = 0; k < g.N(); ++k)
        for (int m = 0; m < g.N(); ++m) {
            const double xi = g.axis.point(m);
            const double w = std::pow(1.0 + xi * xi, 0.5 * weight_power);
            best = std::max(best, w * std::abs(d.at(k, m)));
        }
    return best;
}

template <class Deriv>
SeminormReport seminorm_impl(const PhaseGrid& g, int N, int m, int min_order, Deriv&& deriv) {
    if (m < 0 || m > 3) throw UnsupportedOrder("seminorm: m must be in 0..3");
    SeminormReport r{N, m, 0.0};
    for (int alpha = 0; alpha <= m; ++alpha)
        for (int beta = 0; beta <= m; ++beta) {
            if (alpha + beta < min_order) continue;
            r.value = std::max(r.value, weighted_sup(deriv(alpha, beta), g, N + alpha));
        }
    return r;
}

}  // namespace

SeminormReport seminorm(const Field& a, int N, int m, int min_order) {
    if (a.space != Space::phase) throw ShapeError("seminorm: symbol must be a phase field");
    return seminorm_impl(a.phase_grid(), N, m, min_order,
                         [&](int alpha, int beta) { return detail::spectral_derivative_any(a, alpha, beta); });
}

SeminormReport seminorm(const GaussianSymbolParams& p, const PhaseGrid& g, int N, int m, int min_order) {
    return seminorm_impl(g, N, m, min_order,
                         [&](int alpha, int beta) { return gaussian_derivative(p, g, alpha, beta); });
}

VerificationReport calculus_boundedness_ratio(const WeylBackend& bk, std::span<const Field> family, int N, int m) {
    VerificationReport rep;
    rep.set("N", N);
    rep.set("m", m);
    double worst = 0.0;
    int i = 0;
    for (const auto& a : family) {
        const std::string key = "symbol" + std::to_string(i++);
        const double s = seminorm(a, N, m).value;
        if (s == 0.0) {
            rep.set(key + ".note", std::string("zero seminorm, skipped"));
            continue;
        }
        const double ratio = operator_norm(quantize(bk, a)) / s;
        rep.set(key + ".ratio", ratio);
        worst = std::max(worst, ratio);
    }
    rep.set("max_ratio", worst);
    rep.require("max_ratio_finite", std::isfinite(worst));
    return rep;
}

SymbolFn plateau_bump(double r0, double r1) {
    if (!(r1 > r0 && r0 >= 0.0)) throw DomainError("plateau_bump: need 0 <= r0 < r1");
    return [r0, r1](double x, double xi) -> cplx {
        const double r = std::sqrt(x * x + xi * xi);
        if (r <= r0) return 1.0;
        if (r >= r1) return 0.0;
        const double s = (r - r0) / (r1 - r0);
        const double a = std::exp(-1.0 / (1.0 - s));
        const double b = std::exp(-1.0 / s);
        return a / (a + b);
    };
}

SweepResult approx_identity_sweep(const WeylBackend& bk, const PhaseGrid& g, const SymbolFn& eta,
                                  std::span<const int> ks, const Vector& f) {
    if (std::abs(eta(0.0, 0.0) - 1.0) > 1e-12) throw DomainError("approx_identity_sweep: eta(0,0) must be 1");
    SweepResult out;
    for (int k : ks) {
        const double s = 1.0 / k;
        Field a = sample_fn([&](double x, double xi) { return eta(s * x, s * xi); }, g);
        const double e = (quantize(bk, a) * f - f).norm();
        out.errors.push_back(e);
        out.report.set("k" + std::to_string(k) + ".error", e);
    }
    bool monotone = true;
    const std::size_t n = out.errors.size();
    for (std::size_t i = n / 2; i + 1 < n; ++i)
        if (out.errors[i + 1] > out.errors[i] && out.errors[i + 1] > 1e-13) monotone = false;
    out.report.require("tail_decreasing", monotone);
    if (n > 0) out.report.set("final_error", out.errors.back());
    return out;
}

S0Extension s0_extend(const WeylBackend& bk, const PhaseGrid& g, const SymbolFn& a, const SymbolFn& eta,
                      std::span<const int> ns, const Vector& f) {
    S0Extension out;
    Vector prev;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double s = 1.0 / ns[i];
        Field an = sample_fn([&](double x, double xi) { return a(x, xi) * eta(s * x, s * xi); }, g);
        Vector cur = quantize(bk, an) * f;
        if (i > 0) {
            const double inc = (cur - prev).norm();
            out.increments.push_back(inc);
            out.report.set("increment" + std::to_string(i), inc);
        }
        prev = std::move(cur);
    }
    bool decaying = true;
    for (std::size_t i = 0; i + 1 < out.increments.size(); ++i)
        if (out.increments[i + 1] > 0.5 * out.increments[i] && out.increments[i + 1] > 1e-12) decaying = false;
    out.report.require("increments_halve", decaying);
    out.value = std::move(prev);
    return out;
}

namespace {

// Accepts "a", "bi", "a+bi" and "a-bi".
cplx parse_number(const std::string& item, std::string_view what) {
    auto bad = [&] { return ParseError(std::string(what) + ": bad number '" + item + "'"); };
    auto real = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != t.size()) throw bad();
        return v;
    };
    if (item.empty()) throw bad();
    if (item.back() != 'i') return real(item);
    const std::string body = item.substr(0, item.size() - 1);
    // Split before the last sign that is not part of an exponent.
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    if (cut == std::string::npos) {
        if (body.empty() || body == "+" || body == "-") return {0.0, body == "-" ? -1.0 : 1.0};
        return {0.0, real(body)};
    }
    const std::string im = body.substr(cut);
    return {real(body.substr(0, cut)), im.size() == 1 ? (im == "-" ? -1.0 : 1.0) : real(im)};
}

std::vector<cplx> parse_list(std::string_view s, std::string_view what) {
    std::vector<cplx> out;
    std::string item;
    for (char c : s) {
        if (c == ',') {
            out.push_back(parse_number(item, what));
            item.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            item.push_back(c);
        }
    }
    out.push_back(parse_number(item, what));
    return out;
}

}  // namespace

Symbol parse_symbol(std::string_view spec) {
    if (spec.starts_with("gaussian:")) {
        auto v = parse_list(spec.substr(9), "gaussian");
        if (v.size() != 2) throw ParseError("gaussian symbol: expected gaussian:c,lambda");
        if (v[1].real() <= 0.0) throw ParseError("gaussian symbol: Re lambda must be positive");
        return GaussianSymbolParams{v[0], v[1]};
    }
    if (spec.starts_with("mehler:")) {
        auto v = parse_list(spec.substr(7), "mehler");
        if (v.size() != 2) throw ParseError("mehler symbol: expected mehler:t,d");
        if (v[1] != cplx(1.0)) throw ParseError("mehler symbol: only d = 1 is implemented");
        if (v[0].real() <= 0.0) throw ParseError("mehler symbol: Re t must be positive");
        return mehler_symbol(v[0], 1);
    }
    Field f = read_field(std::string(spec));
    if (f.space != Space::phase) throw ParseError(std::string(spec) + ": symbol file must hold a phase field");
    return f;
}

}  // namespace wcl
