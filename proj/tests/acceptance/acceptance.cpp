// One line per acceptance criterion. Suites run with the quick profile and
// default config; the second pass runs `all` and must reproduce the first
// byte for byte.
//
// Exit status is nonzero when any criterion fails, except those listed in
// kKnownFailures, which still print FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wcl/diagnostics.hpp"
#include "wcl/suites.hpp"

using namespace wcl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Run {
    VerificationReport report;
    double seconds = 0.0;
    std::map<std::string, std::string> values;

    const std::string& at(const std::string& key) const {
        static const std::string missing = "<missing>";
        const auto it = values.find(key);
        return it == values.end() ? missing : it->second;
    }

    // Every `.pass` line under `prefix` is true, and there is at least one.
    bool all_pass(const std::string& prefix) const {
        int n = 0;
        for (const auto& [k, v] : values) {
            if (k.rfind(prefix, 0) != 0 || !k.ends_with(".pass")) continue;
            ++n;
            if (v != "true") return false;
        }
        return n > 0;
    }

    double num(const std::string& key) const {
        try {
            return std::stod(at(key));
        } catch (...) {
            return std::nan("");
        }
    }
};

Run run(const std::string& suite) {
    Run r;
    const auto t0 = Clock::now();
    r.report = run_suite(suite, Config{}, Profile::quick);
    r.seconds = seconds_since(t0);
    for (const auto& l : r.report.lines()) r.values[l.key] = l.value;
    std::fprintf(stderr, "  ran %-16s %7.1f s\n", suite.c_str(), r.seconds);
    return r;
}

const std::set<int> kKnownFailures{9};

struct Line {
    int id;
    bool pass;
    std::string text;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

}  // namespace

int main() {
    const auto total0 = Clock::now();
    std::map<std::string, Run> runs;
    std::string first_pass;
    for (const auto& s : suite_names()) {
        runs[s] = run(s);
        first_pass += runs[s].report.to_text();
    }
    const double first_seconds = seconds_since(total0);

    std::vector<Line> out;
    auto add = [&](int id, bool pass, std::string text) { out.push_back({id, pass, std::move(text)}); };

    {
        const Run& r = runs["ccr"];
        const double res = std::max({r.num("ccr.grid.residual_AA"), r.num("ccr.grid.residual_BB"),
                                     r.num("ccr.grid.residual_AB")});
        add(1, r.all_pass("ccr.grid.") && r.at("ccr.grid.N") == "64" && r.seconds < 5.0,
            "CCR exactness, grid N=64: max residual " + fmt("%.2e", res) + " < 1e-10, " + fmt("%.1f", r.seconds) +
                " s < 5 s");
    }
    {
        const Run& r = runs["sigma"];
        add(2, r.all_pass("sigma.grid.") && r.all_pass("sigma.hermite.") && r.at("sigma.grid.samples") == "50" &&
                   r.seconds < 30.0,
            "composition law: grid " + r.at("sigma.grid.max_residual") + " < 1e-9, hermite " +
                r.at("sigma.hermite.max_residual") + " < 1e-6 (50 samples each), " + fmt("%.1f", r.seconds) +
                " s < 30 s");
    }
    {
        const Run& r = runs["mehler"];
        const bool ok = r.all_pass("mehler.eigen.t0.25") && r.all_pass("mehler.eigen.t1.") &&
                        r.all_pass("mehler.eigen.t4") && r.all_pass("mehler.semigroup_law") && r.seconds < 60.0;
        const double ev = std::max({r.num("mehler.eigen.t0.25"), r.num("mehler.eigen.t1"), r.num("mehler.eigen.t4")});
        add(3, ok,
            "Mehler eigenvalues e^{-tn}, n<=12, hermite n_max=16: " + fmt("%.2e", ev) + " < 1e-6; semigroup law " +
                r.at("mehler.semigroup_law") + " < 1e-8, " + fmt("%.1f", r.seconds) + " s < 60 s");
    }
    {
        const Run& r = runs["moyal"];
        add(4, r.all_pass("moyal.homomorphism") && r.all_pass("moyal.mehler_law") && r.at("moyal.pairs") == "10" &&
                   r.seconds < 300.0,
            "Moyal homomorphism over 10 pairs: " + r.at("moyal.homomorphism") + " < 1e-6; Gaussian law via FFT " +
                r.at("moyal.mehler_law") + " < 1e-7, " + fmt("%.1f", r.seconds) + " s < 300 s");
    }
    {
        const Run& r = runs["sectorial"];
        const auto t0 = Clock::now();
        const std::vector<double> ts{0.01, 0.1, 1.0, 5.0, 10.0, 20.0};
        const VerificationReport tlp = tlp_bound_check(ts);
        const double secs = seconds_since(t0);
        const std::string a = fmt("%.4g", tlp_actual(1.0)), b = fmt("%.4g", tlp_bound(1.0));
        add(5, tlp.passed() && r.all_pass("sectorial.tlp.") && a == "0.3679" && b == "5.886" && secs < 1.0,
            "t L P(t) bound at t in {0.01..20}: all strict; t=1 actual " + a + " vs bound " + b + ", " +
                fmt("%.3f", secs) + " s < 1 s");
    }
    {
        const Run& r = runs["untwist"];
        double worst = 0.0;
        int symbols = 0;
        for (int i = 0; i < 5; ++i) {
            const std::string k = "untwist.symbol" + std::to_string(i) + ".max_relative_residual";
            if (r.at(k) == "<missing>") continue;
            ++symbols;
            worst = std::max(worst, r.num(k));
        }
        add(6, r.all_pass("untwist.") && symbols == 5 && r.at("untwist.symbol0.trials") == "10" &&
                   r.at("untwist.N") == "32" && r.seconds < 600.0,
            "untwisting, 5 symbols x 10 fields on 32^2: max relative residual " + fmt("%.2e", worst) + " < 1e-6, " +
                fmt("%.1f", r.seconds) + " s < 600 s");
    }
    {
        const Run& r = runs["norm-equality"];
        double worst = 0.0;
        for (const char* t : {"t0.5", "t1", "t2"})
            for (const char* lvl : {".coarse.gap", ".fine.gap"})
                worst = std::max(worst, r.num(std::string("norm-equality.") + t + lvl));
        add(7, r.all_pass("norm-equality.") && r.seconds < 900.0,
            "norm equality, mehler(0.5,1,2): max gap " + fmt("%.2e", worst) + " < 0.05, shrinking 32->48, " +
                fmt("%.1f", r.seconds) + " s < 900 s");
    }
    {
        const Run& r = runs["transference"];
        double worst = 0.0;
        for (const char* b : {"grid", "hermite", "skewed"})
            for (const char* t : {"t0.5", "t1", "t2"})
                worst = std::max(worst, r.num(std::string("transference.") + b + "." + t + ".norm_over_bound"));
        add(8, r.all_pass("transference.grid.") && r.all_pass("transference.hermite.") &&
                   r.all_pass("transference.skewed.") && r.seconds < 300.0,
            "transference on grid, hermite, skewed: max ||a(A,B)|| / (M_A^2 M_B^2 ||C|| 1.05) = " +
                fmt("%.4f", worst) + " <= 1, " + fmt("%.1f", r.seconds) + " s < 300 s");
    }
    {
        const Run& s = runs["sectorial"];
        const Run& d = runs["domination"];
        const double secs = s.seconds + d.seconds;
        add(9, s.all_pass("sectorial.sector.") && d.all_pass("domination.") && secs < 30.0,
            "sector and domination constants: C1 spread " + s.at("sectorial.sector.C1_spread") + ", C2 spread " +
                s.at("sectorial.sector.C2_spread") + ", C spread " + d.at("domination.C_spread") +
                " (each < 4); modulus deviation " + d.at("domination.modulus_deviation") + " < 1e-10, " +
                fmt("%.1f", secs) + " s < 30 s");
    }
    {
        const Run& r = runs["square-function"];
        add(10, r.all_pass("square-function.") && r.seconds < 60.0,
            "square function, 100 fields, s in {1,1.5,2}, |j|<=10: max exact/||f||^2 " +
                r.at("square-function.max_exact_over_norm2") + " <= 1; MC deviation " +
                r.at("square-function.max_mc_relative_deviation") + " < 0.05, " + fmt("%.1f", r.seconds) + " s < 60 s");
    }
    {
        const Run& r = runs["dyadic"];
        add(11, r.all_pass("dyadic.uniformity.") && r.seconds < 60.0,
            "dyadic uniformity: sup(k<=20)/sup(k<=5) " + r.at("dyadic.uniformity.uniformity_ratio") +
                " < 1.25; telescoped " + r.at("dyadic.uniformity.telescoped_sup") + " <= 1 + 1e-9, " +
                fmt("%.1f", r.seconds) + " s < 60 s");
    }
    {
        const Run& r = runs["transference"];
        const auto t0 = Clock::now();
        const GaussianPairBackend gp(make_state_grid(64));
        std::vector<double> ts;
        for (int n = 1; n <= 6; ++n) ts.push_back(n * gp.grid().h / std::sqrt(2.0));
        const bool direct = gaussian_pair_growth(gp, ts).passed();
        const double secs = seconds_since(t0);
        add(12, direct && r.all_pass("transference.gaussian_pair.") && secs < 30.0,
            "Gaussian pair: p=2 deviation " + r.at("transference.gaussian_pair.p2_deviation") +
                " < 1e-8; p=4 norms strictly increasing, " + fmt("%.2f", secs) + " s < 30 s");
    }
    {
        const auto t0 = Clock::now();
        const VerificationReport all = run_suite("all", Config{}, Profile::quick);
        const double second_seconds = seconds_since(t0);
        const bool same = all.to_text() == first_pass;
        const double total = first_seconds + second_seconds;
        add(13, same && total < 600.0,
            std::string("determinism: two quick runs ") + (same ? "byte-identical" : "DIFFER") + ", " +
                fmt("%.1f", first_seconds) + " s + " + fmt("%.1f", second_seconds) + " s < 600 s");
    }

    int unexpected = 0;
    for (const auto& l : out) {
        const bool known = kKnownFailures.count(l.id) != 0;
        const char* verdict = l.pass ? "PASS" : (known ? "FAIL (known)" : "FAIL");
        std::printf("[%2d] %-12s %s\n", l.id, verdict, l.text.c_str());
        if (!l.pass && !known) ++unexpected;
    }
    std::printf("total %.1f s\n", seconds_since(total0));
    return unexpected == 0 ? 0 : 1;
}
