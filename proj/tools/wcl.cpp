// wcl: quantization, Moyal products and the verification suites.
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>

#include "wcl/calculus.hpp"
#include "wcl/diagnostics.hpp"
#include "wcl/errors.hpp"
#include "wcl/io.hpp"
#include "wcl/moyal.hpp"
#include "wcl/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out) {
    std::cout << text;
    if (out.empty()) return;
    std::ofstream f(out, std::ios::binary);
    if (!f) throw wcl::IoError("cannot write " + out);
    f << text;
}

int cmd_verify(const std::string& suite, const std::string& config, const std::string& profile, int N,
               const std::string& out) {
    if (!wcl::is_suite(suite)) throw wcl::UsageError("unknown suite '" + suite + "'");
    wcl::Config cfg = config.empty() ? wcl::Config{} : wcl::Config::load(config);
    if (N > 0 && suite != "all") cfg.set(suite + ".N", std::to_string(N));
    const auto t0 = std::chrono::steady_clock::now();
    const wcl::VerificationReport rep = wcl::run_suite(suite, cfg, wcl::profile_from_string(profile));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(rep.to_text(), out);
    std::fprintf(stderr, "%s: %s in %.1f s\n", suite.c_str(), rep.passed() ? "pass" : "FAIL", secs);
    for (const auto& f : rep.failures()) std::fprintf(stderr, "  failed: %s\n", f.c_str());
    return rep.passed() ? 0 : kExitFail;
}

int cmd_quantize(const std::string& symbol, const std::string& backend, const std::string& out) {
    const auto bk = wcl::make_backend(wcl::BackendDescriptor::parse_short(backend));
    const wcl::Symbol a = wcl::parse_symbol(symbol);
    const wcl::Matrix M = wcl::quantize(*bk, a);
    if (!out.empty()) wcl::write_matrix(out, M);
    wcl::VerificationReport rep("quantize");
    rep.set("backend", backend);
    rep.set("symbol", symbol);
    rep.set("rows", static_cast<long long>(M.rows()));
    rep.set("cols", static_cast<long long>(M.cols()));
    rep.set("entry00.re", M(0, 0).real());
    rep.set("entry00.im", M(0, 0).imag());
    std::cout << rep.to_text();
    return 0;
}

wcl::Field on_grid(const wcl::Symbol& a, const wcl::PhaseGrid& g) { return wcl::sample(a, g); }

int cmd_moyal(const std::string& as, const std::string& bs, const std::string& method, int N, const std::string& out) {
    const wcl::Symbol a = wcl::parse_symbol(as);
    const wcl::Symbol b = wcl::parse_symbol(bs);
    wcl::PhaseGrid g = wcl::make_phase_grid(N);
    if (const auto* f = std::get_if<wcl::Field>(&a)) g = f->phase_grid();
    else if (const auto* f2 = std::get_if<wcl::Field>(&b)) g = f2->phase_grid();

    wcl::Field c;
    if (method == "exact-gaussian") {
        const auto* pa = std::get_if<wcl::GaussianSymbolParams>(&a);
        const auto* pb = std::get_if<wcl::GaussianSymbolParams>(&b);
        if (!pa || !pb) throw wcl::UsageError("exact-gaussian needs closed-form Gaussian symbols");
        c = wcl::sample(wcl::moyal_gaussian(*pa, *pb), g);
    } else if (method == "fft") {
        c = wcl::moyal_fft(on_grid(a, g), on_grid(b, g));
    } else if (method.starts_with("expansion:")) {
        int M = 0;
        try {
            M = std::stoi(method.substr(10));
        } catch (const std::exception&) {
            throw wcl::UsageError("bad expansion order in '" + method + "'");
        }
        c = wcl::moyal_expansion(on_grid(a, g), on_grid(b, g), M);
    } else {
        throw wcl::UsageError("unknown method '" + method + "'");
    }
    if (!out.empty()) wcl::write_field(out, c);
    const wcl::PhaseGrid cg = c.phase_grid();
    wcl::VerificationReport rep("moyal");
    rep.set("method", method);
    rep.set("N", cg.N());
    rep.set("origin.re", c.at(cg.N() / 2, cg.N() / 2).real());
    rep.set("origin.im", c.at(cg.N() / 2, cg.N() / 2).imag());
    std::cout << rep.to_text();
    return 0;
}

int cmd_report(const std::string& kind, const std::string& symbol, const std::string& backend, int N, int m,
               int grid_N, const std::string& suite, double theta, int samples) {
    wcl::VerificationReport rep(kind);
    if (kind == "seminorms") {
        if (symbol.empty()) throw wcl::UsageError("report seminorms needs --symbol");
        const wcl::PhaseGrid g = wcl::make_phase_grid(grid_N);
        const wcl::Symbol a = wcl::parse_symbol(symbol);
        const wcl::SeminormReport s = std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, wcl::Field>) return wcl::seminorm(v, N, m);
                else return wcl::seminorm(v, g, N, m);
            },
            a);
        rep.set("N", s.N);
        rep.set("m", s.m);
        rep.set("value", s.value);
    } else if (kind == "spectrum") {
        const auto desc = wcl::BackendDescriptor::parse_short(backend.empty() ? "hermite:12" : backend);
        if (desc.kind != wcl::BackendKind::hermite) throw wcl::UsageError("report spectrum needs a hermite backend");
        const wcl::HermiteBackend hb(desc.n_max);
        const auto K = hb.trusted_dim();
        const wcl::Matrix L = hb.L().topLeftCorner(K, K);
        Eigen::SelfAdjointEigenSolver<wcl::Matrix> es(L, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < K; ++i) rep.set("eigenvalue." + std::to_string(i), es.eigenvalues()[i]);
    } else if (kind == "constants") {
        if (suite == "sectorial") {
            const wcl::SectorFit f = wcl::sector_lambda_fit(theta, samples);
            rep.set("theta", f.theta);
            rep.set("C1", f.C1);
            rep.set("C2", f.C2);
            rep.set("min_re_lambda", f.min_re_lambda);
        } else if (suite == "domination") {
            const wcl::DominationFit f = wcl::domination_fit(theta, samples, 6.0);
            rep.set("theta", f.theta);
            rep.set("C", f.C);
            rep.set("max_modulus_deviation", f.max_modulus_deviation);
            rep.set("C_growth", f.C_growth);
        } else {
            throw wcl::UsageError("report constants: --suite sectorial|domination");
        }
    } else {
        throw wcl::UsageError("unknown report kind '" + kind + "'");
    }
    std::cout << rep.to_text();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl calculus verification tool"};
    app.require_subcommand(1);

    std::string suite, config, profile = "quick", out;
    int verify_N = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--config", config, "key = value config file");
    verify->add_option("--profile", profile, "quick|full");
    verify->add_option("--N", verify_N, "Grid size override");
    verify->add_option("--out", out, "Also write the report here");

    std::string symbol, backend, qout;
    auto* quant = app.add_subcommand("quantize", "Write a(A,B) as a WCLMATRX file");
    quant->add_option("--symbol", symbol, "gaussian:c,l | mehler:t,1 | field file")->required();
    quant->add_option("--backend", backend, "grid:N | hermite:n | gaussian:N | twisted:N | skewed:l:base:n")
        ->required();
    quant->add_option("--out", qout, "Output file");

    std::string ma, mb, method = "fft", mout;
    int moyal_N = 64;
    auto* moyal = app.add_subcommand("moyal", "Moyal product a # b as a WCLFIELD file");
    moyal->add_option("--a", ma, "First symbol")->required();
    moyal->add_option("--b", mb, "Second symbol")->required();
    moyal->add_option("--method", method, "exact-gaussian | fft | expansion:M");
    moyal->add_option("--N", moyal_N, "Grid size for closed-form symbols");
    moyal->add_option("--out", mout, "Output file");

    std::string kind, rsymbol, rbackend, rsuite = "sectorial";
    int rN = 0, rm = 2, grid_N = 64, samples = 200;
    double theta = 0.785;
    auto* report = app.add_subcommand("report", "Seminorms, spectra and fitted constants");
    report->add_option("kind", kind, "seminorms | spectrum | constants")->required();
    report->add_option("--symbol", rsymbol, "Symbol (seminorms)");
    report->add_option("--backend", rbackend, "Backend (spectrum)");
    report->add_option("--N", rN, "Decay order N (seminorms)");
    report->add_option("--m", rm, "Derivative order m <= 3 (seminorms)");
    report->add_option("--grid", grid_N, "Phase grid size for closed-form symbols");
    report->add_option("--suite", rsuite, "sectorial | domination (constants)");
    report->add_option("--theta", theta, "Sector half-angle (constants)");
    report->add_option("--samples", samples, "Sample count (constants)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(suite, config, profile, verify_N, out);
        if (*quant) return cmd_quantize(symbol, backend, qout);
        if (*moyal) return cmd_moyal(ma, mb, method, moyal_N, mout);
        if (*report) return cmd_report(kind, rsymbol, rbackend, rN, rm, grid_N, rsuite, theta, samples);
    } catch (const wcl::UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const wcl::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitUsage;
    } catch (const wcl::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitUsage;
    } catch (const wcl::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
