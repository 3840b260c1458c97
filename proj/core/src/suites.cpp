#include "wcl/suites.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "wcl/calculus.hpp"
#include "wcl/diagnostics.hpp"
#include "wcl/errors.hpp"
#include "wcl/linalg.hpp"
#include "wcl/moyal.hpp"
#include "wcl/twisted.hpp"

namespace wcl {
namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, std::string_view s) {
    s = trim(s);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError("config: " + key + ": not a number: '" + std::string(s) + "'");
    return v;
}

// Section-qualified lookups for one suite.
struct Params {
    const Config& cfg;
    std::string suite;
    Profile profile;

    std::string key(const char* k) const { return suite + "." + k; }
    int i(const char* k, int quick, int full) const {
        return cfg.get_int(key(k), profile == Profile::quick ? quick : full);
    }
    int i(const char* k, int fallback) const { return cfg.get_int(key(k), fallback); }
    double d(const char* k, double fallback) const { return cfg.get_double(key(k), fallback); }
    std::vector<double> list(const char* k, std::vector<double> fallback) const {
        return cfg.get_doubles(key(k), std::move(fallback));
    }
    std::uint64_t seed() const { return static_cast<std::uint64_t>(i("seed", 1)); }
};

double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
    return m;
}

// Interior |x|, |xi| <= L/4.
double interior_diff(const Field& a, const Field& b) {
    const PhaseGrid g = a.phase_grid();
    const double q = g.axis.extent() / 4.0;
    double m = 0.0;
    for (int k = 0; k < g.N(); ++k)
        for (int j = 0; j < g.N(); ++j)
            if (std::abs(g.axis.point(k)) <= q && std::abs(g.axis.point(j)) <= q)
                m = std::max(m, std::abs(a.at(k, j) - b.at(k, j)));
    return m;
}

VerificationReport suite_ccr(const Params& p) {
    VerificationReport rep;
    const int N = p.i("N", 64);
    const int count = p.i("pairs", 20);
    const auto samples = lattice_sigma_samples(1.0, count, p.i("range", 8), p.seed());

    auto pairs_for = [&](double h, int step) {
        std::vector<std::pair<double, double>> st;
        for (const auto& s : samples) st.emplace_back(s.u * h * step, s.v * h * step);
        return st;
    };

    const StateGrid g = make_state_grid(N);
    rep.set("grid.N", N);
    rep.merge(verify_ccr(GridStandardBackend(g), pairs_for(g.h, 1)), "grid");

    // Two-axis checks use the first few pairs; each costs d^2 dense products.
    const auto few = [&](std::vector<std::pair<double, double>> st) {
        st.resize(std::min<std::size_t>(st.size(), static_cast<std::size_t>(p.i("pairs_2d", 6))));
        return st;
    };
    const int N2 = p.i("N_2d", 12);
    const StateGrid g2 = make_state_grid(N2, 2);
    rep.set("grid2d.N", N2);
    rep.merge(verify_ccr(GridStandardBackend(g2), few(pairs_for(g2.h, 1))), "grid2d");

    // The twisted pair realizes the relations exactly on the even sublattice.
    const int Nt = p.i("N_twisted", 12);
    const StateGrid gt = make_state_grid(Nt, 2);
    rep.set("twisted.N", Nt);
    rep.merge(verify_ccr(TwistedStandardBackend(gt), few(pairs_for(gt.h, 2))), "twisted");
    return rep;
}

VerificationReport suite_sigma(const Params& p) {
    VerificationReport rep;
    const int N = p.i("N", 64);
    const int count = p.i("samples", 50, 100);
    const StateGrid g = make_state_grid(N);
    rep.set("grid.N", N);
    rep.merge(verify_sigma(GridStandardBackend(g), lattice_sigma_samples(g.h, count, p.i("range", 10), p.seed()),
                           1e-9),
              "grid");
    const int n_max = p.i("n_max", 16);
    rep.set("hermite.n_max", n_max);
    rep.merge(verify_sigma(HermiteBackend(n_max), box_sigma_samples(p.d("bound", 1.0), count, p.seed()), 1e-6),
              "hermite");
    return rep;
}

VerificationReport suite_mehler(const Params& p) {
    VerificationReport rep;
    const int n_max = p.i("n_max", 16);
    const HermiteBackend hb(n_max);
    rep.set("n_max", n_max);

    for (double t : p.list("t", {0.25, 1.0, 4.0})) {
        const cplx tc(t, 0.0);
        rep.check("eigen.t" + format_double(t), mehler_eigencheck(hb, std::span<const cplx>(&tc, 1)), 1e-6);
    }
    const cplx tz(1.0, 1.0);
    rep.check("eigen.t1+1i", mehler_eigencheck(hb, std::span<const cplx>(&tz, 1)), 1e-6);

    double law = 0.0;
    for (auto [s, t] : std::vector<std::pair<double, double>>{{0.25, 1.0}, {0.5, 0.5}, {1.0, 3.0}}) {
        const Matrix D = quantize(hb, mehler_symbol(s)) * quantize(hb, mehler_symbol(t)) -
                         quantize(hb, mehler_symbol(s + t));
        law = std::max(law, trusted_residual(hb, D));
    }
    rep.check("semigroup_law", law, 1e-8);

    const Matrix P = ground_projection(hb);
    rep.check("ground_projection_idempotence", trusted_residual(hb, P * P - P), 1e-8);

    // Grid pair against the oscillator eigenbasis sampled on the grid.
    const int N = p.i("N", 64);
    const StateGrid g = make_state_grid(N);
    const double r = 1.0 / 3.0;
    const Matrix Q = quantize(GridStandardBackend(g), mehler_symbol(std::log(3.0)));
    const Matrix H = hermite_lift(g, N);
    Vector e(N);
    for (int n = 0; n < N; ++n) e[n] = std::pow(r, n);
    rep.check("grid_vs_hermite_lift", (Q - H * e.asDiagonal() * H.adjoint()).norm(), 1e-8);

    for (double h : {1e-2, 1e-3}) rep.set("generator_residual.h" + format_double(h), generator_residual(hb, hb.mode(2), h));
    return rep;
}

VerificationReport suite_moyal(const Params& p) {
    VerificationReport rep;
    const int N = p.i("N", 64);
    const int pairs = p.i("pairs", 10, 20);
    const PhaseGrid g = make_phase_grid(N);
    const GridStandardBackend gb(g.axis);
    std::mt19937_64 rng(p.seed());
    std::uniform_real_distribution<double> lam(0.2, 1.0), phase(-kPi, kPi);

    double hom = 0.0, closed = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const GaussianSymbolParams pa{std::polar(1.0, phase(rng)), lam(rng)};
        const GaussianSymbolParams pb{std::polar(1.0, phase(rng)), lam(rng)};
        const Field a = sample(pa, g), b = sample(pb, g);
        const Field c = moyal_fft(a, b);
        hom = std::max(hom, (quantize(gb, a) * quantize(gb, b) - quantize(gb, c)).norm());
        closed = std::max(closed, interior_diff(c, sample(moyal_gaussian(pa, pb), g)));
    }
    rep.set("pairs", pairs);
    rep.check("homomorphism", hom, 1e-6);
    rep.check("fft_vs_closed_form", closed, 1e-6);

    double law = 0.0;
    for (auto [t1, t2] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {1.0, 2.0}, {0.75, 0.75}}) {
        const Field c = moyal_fft(sample(mehler_symbol(t1), g), sample(mehler_symbol(t2), g));
        law = std::max(law, max_abs_diff(c, sample(mehler_symbol(t1 + t2), g)));
    }
    rep.check("mehler_law", law, 1e-7);

    const Field a = sample(GaussianSymbolParams{1.0, 0.5}, g);
    const Field b = sample(GaussianSymbolParams{1.0, 0.7}, g);
    const Field c = sample(GaussianSymbolParams{1.0, 0.9}, g);
    rep.check("associativity", max_abs_diff(moyal_fft(a, moyal_fft(b, c)), moyal_fft(moyal_fft(a, b), c)), 1e-6);
    return rep;
}

std::vector<Symbol> untwist_symbols() {
    return {mehler_symbol(0.5), mehler_symbol(1.0), mehler_symbol(2.0), GaussianSymbolParams{cplx(0.5, 0.5), 0.4},
            GaussianSymbolParams{1.0, cplx(0.6, 0.3)}};
}

VerificationReport suite_untwist(const Params& p) {
    VerificationReport rep;
    const int N = p.i("N", 32, 48);
    const int trials = p.i("fields", 10);
    const PhaseGrid g = make_phase_grid(N);
    rep.set("N", N);
    const auto syms = untwist_symbols();
    for (std::size_t i = 0; i < syms.size(); ++i)
        rep.merge(untwist_check(syms[i], g, trials, p.seed() + 100 * i), "symbol" + std::to_string(i));
    return rep;
}

VerificationReport suite_norm_equality(const Params& p) {
    VerificationReport rep;
    const int N1 = p.i("N_coarse", 32, 48);
    const int N2 = p.i("N_fine", 48, 64);
    for (double t : p.list("t", {0.5, 1.0, 2.0})) {
        const std::string k = "t" + format_double(t);
        const auto c = norm_equality_check(mehler_symbol(t), N1);
        const auto f = norm_equality_check(mehler_symbol(t), N2);
        rep.merge(c.report, k + ".coarse");
        rep.merge(f.report, k + ".fine");
        const double gc = std::abs(c.ratio - 1.0), gf = std::abs(f.ratio - 1.0);
        rep.require(k + ".gap_shrinks", gf < gc,
                    format_double(gf) + " at N=" + std::to_string(N2) + " vs " + format_double(gc));
    }
    return rep;
}

VerificationReport suite_transference(const Params& p) {
    VerificationReport rep;
    const int Nt = p.i("N_twisted", 32, 48);
    const int N = p.i("N", 64);
    const int n_max = p.i("n_max", 16);
    const double skew = p.d("skew", 1.0);
    const StateGrid g = make_state_grid(N);
    const std::vector<std::pair<std::string, BackendPtr>> backends{
        {"grid", standard_pair_grid(g)},
        {"hermite", hermite_backend(n_max)},
        {"skewed", skew_transform(standard_pair_grid(g), skew)},
    };
    rep.set("N_twisted", Nt);
    for (double t : p.list("t", {0.5, 1.0, 2.0}))
        for (const auto& [name, bk] : backends)
            rep.merge(transference_check(*bk, mehler_symbol(t), Nt), name + ".t" + format_double(t));

    const GaussianPairBackend gp(make_state_grid(N));
    std::vector<double> ts;
    for (int n = 1; n <= 6; ++n) ts.push_back(n * gp.grid().h / std::sqrt(2.0));
    rep.merge(gaussian_pair_growth(gp, ts), "gaussian_pair");
    return rep;
}

VerificationReport suite_sectorial(const Params& p) {
    VerificationReport rep;
    const HermiteBackend hb(p.i("n_max", 16));
    const auto ts = p.list("t", {0.01, 0.1, 1.0, 5.0, 10.0, 20.0});
    rep.merge(tlp_bound_check(ts, &hb), "tlp");
    const auto th = p.list("theta", {kPi / 8, kPi / 4, 3 * kPi / 8, 7 * kPi / 16});
    rep.merge(sector_report(th, p.i("samples", 200)), "sector");
    return rep;
}

VerificationReport suite_domination(const Params& p) {
    const auto th = p.list("theta", {kPi / 8, kPi / 4, 3 * kPi / 8, 7 * kPi / 16});
    return domination_report(th, p.i("samples", 200), p.d("box", 6.0));
}

VerificationReport suite_square_function(const Params& p) {
    const HermiteBackend hb(p.i("n_max", 16));
    const auto s = p.list("s", {1.0, 1.5, 2.0});
    return square_function_check(hb, s, p.i("J", 10), p.i("fields", 100, 200), p.i("draws", 20000), p.seed());
}

VerificationReport suite_dyadic(const Params& p) {
    VerificationReport rep;
    const PhaseGrid g = make_phase_grid(p.i("N", 64));
    std::vector<int> ks;
    for (int k = 1; k <= p.i("k_max", 20); ++k) ks.push_back(k);
    const auto s = p.list("s", {1.0, 1.5, 2.0});
    rep.merge(dyadic_symbol_uniformity(g, ks, p.i("trials", 5, 10), s, p.seed()), "uniformity");

    const PhaseGrid g2 = make_phase_grid(p.i("N_derivative", 128));
    const std::vector<double> lambdas{0.1, 0.2, 0.4};
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            rep.merge(polynomial_derivative_check(g2, a, b, lambdas),
                      "derivative.a" + std::to_string(a) + "b" + std::to_string(b));
    return rep;
}

// e^{-x^2} <xi>^{-2}, cut off smoothly between |xi| = 3 and 4.5 so that the
// symbol is the same function on every grid that contains the window.
Field windowed_decay(const PhaseGrid& g) {
    const auto cut = plateau_bump(3.0, 4.5);
    return sample_fn([&](double x, double xi) { return cut(0.0, xi) * std::exp(-x * x) / (1.0 + xi * xi); }, g);
}

VerificationReport suite_kernel_bounds(const Params& p) {
    VerificationReport rep;
    const int N = p.i("N", 64);
    const PhaseGrid g = make_phase_grid(N);

    const Field r = sample(GaussianSymbolParams{1.0, 1.0}, g);
    const KernelBounds kb = kernel_bounds(r);
    const double nr = operator_norm_svd(kn_matrix(r));
    rep.set("gaussian.row", kb.row);
    rep.set("gaussian.col", kb.col);
    rep.set("gaussian.norm", nr);
    rep.check_le("gaussian.norm_over_schur", nr / kb.schur(), 1.0);

    const KernelBounds w1 = kernel_bounds(windowed_decay(g));
    const KernelBounds w2 = kernel_bounds(windowed_decay(make_phase_grid(2 * N)));
    rep.set("windowed.row", w1.row);
    rep.set("windowed.col", w1.col);
    rep.set("windowed.refined.row", w2.row);
    rep.set("windowed.refined.col", w2.col);
    rep.check("windowed.refinement_change",
              std::max(std::abs(w2.row / w1.row - 1.0), std::abs(w2.col / w1.col - 1.0)), 0.10);

    // Weyl against Kohn-Nirenberg, with and without the first correction.
    const GridStandardBackend gb(g.axis);
    for (double sigma : p.list("sigma", {1.0, 2.0, 3.0})) {
        const Field a = sample(GaussianSymbolParams{1.0, 1.0 / (sigma * sigma)}, g);
        const Matrix W = quantize(gb, a);
        const double e0 = operator_norm_svd(W - kn_matrix(a));
        const double e1 = operator_norm_svd(W - kn_matrix(kn_symbol(a)));
        const std::string k = "kn.sigma" + format_double(sigma);
        rep.set(k + ".error_plain", e0);
        rep.set(k + ".error_corrected", e1);
        rep.set(k + ".improvement", e0 / e1);
        rep.require(k + ".corrected_is_better", e1 < e0);
    }

    const Field ma = sample(GaussianSymbolParams{1.0, 0.5}, g);
    const Field mb = sample(GaussianSymbolParams{1.0, cplx(0.5, 0.2)}, g);
    std::vector<double> betas;
    for (int M = 0; M <= 1; ++M) {
        const RemainderFit fit = remainder_decay(ma, mb, M);
        const std::string k = "remainder.M" + std::to_string(M);
        rep.set(k + ".beta", fit.beta);
        rep.set(k + ".C", fit.C);
        rep.set(k + ".max_abs", fit.max_abs);
        rep.set(k + ".machine_precision", fit.machine_precision);
        betas.push_back(fit.beta);
    }
    rep.require("remainder.beta_nondecreasing", betas[1] >= betas[0]);
    return rep;
}

using SuiteFn = VerificationReport (*)(const Params&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"ccr", suite_ccr},
        {"sigma", suite_sigma},
        {"mehler", suite_mehler},
        {"moyal", suite_moyal},
        {"untwist", suite_untwist},
        {"norm-equality", suite_norm_equality},
        {"transference", suite_transference},
        {"sectorial", suite_sectorial},
        {"domination", suite_domination},
        {"square-function", suite_square_function},
        {"dyadic", suite_dyadic},
        {"kernel-bounds", suite_kernel_bounds},
    };
    return r;
}

}  // namespace

Config Config::parse(std::string_view text) {
    Config cfg;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                throw ParseError("config line " + std::to_string(line_no) + ": bad section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) throw ParseError("config line " + std::to_string(line_no) + ": empty key");
        cfg.set(section.empty() ? key : section + "." + key, std::string(trim(line.substr(eq + 1))));
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

int Config::get_int(const std::string& key, int fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const double v = to_double(key, it->second);
    if (v != std::floor(v)) throw ParseError("config: " + key + ": integer expected");
    return static_cast<int>(v);
}

double Config::get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : to_double(key, it->second);
}

std::vector<double> Config::get_doubles(const std::string& key, std::vector<double> fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::string_view s = it->second;
    while (!s.empty()) {
        const auto c = s.find(',');
        out.push_back(to_double(key, s.substr(0, c)));
        if (c == std::string_view::npos) break;
        s = s.substr(c + 1);
    }
    if (out.empty()) throw ParseError("config: " + key + ": empty list");
    return out;
}

Profile profile_from_string(std::string_view s) {
    if (s == "quick") return Profile::quick;
    if (s == "full") return Profile::full;
    throw ParseError("unknown profile '" + std::string(s) + "'");
}

std::string_view to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, f] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

VerificationReport run_suite(std::string_view name, const Config& cfg, Profile profile) {
    if (name == "all") {
        VerificationReport rep;
        for (const auto& [k, fn] : registry()) rep.merge(fn(Params{cfg, k, profile}), k);
        return rep;
    }
    for (const auto& [k, fn] : registry()) {
        if (k != name) continue;
        VerificationReport inner = fn(Params{cfg, k, profile});
        VerificationReport rep;
        rep.merge(inner, k);
        return rep;
    }
    throw UsageError("unknown suite '" + std::string(name) + "'");
}

}  // namespace wcl
