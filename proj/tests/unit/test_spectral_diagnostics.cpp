#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "wcl/calculus.hpp"
#include "wcl/diagnostics.hpp"

using namespace wcl;

TEST_CASE("tLP: eigenbasis maximum against brute force") {
    for (double t : {0.01, 0.1, 0.37, 1.0, 5.0, 20.0}) {
        CHECK(tlp_actual(t) == doctest::Approx(oracle::tlp_brute(t)).epsilon(1e-14));
        CHECK(tlp_actual(t) < tlp_bound(t));
    }
    int n = 0;
    CHECK(tlp_actual(1.0, &n) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(n == 1);
    CHECK(tlp_bound(1.0) == doctest::Approx(16.0 / std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("tLP: published values at t = 1") {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", tlp_actual(1.0));
    CHECK(std::string(buf) == "0.3679");
    std::snprintf(buf, sizeof buf, "%.4g", tlp_bound(1.0));
    CHECK(std::string(buf) == "5.886");
}

TEST_CASE("tLP: hermite cross-check") {
    const HermiteBackend hb(16);
    const std::vector<double> ts{0.1, 1.0, 5.0};
    CHECK(tlp_bound_check(ts, &hb).passed());
}

TEST_CASE("sector fit") {
    for (double th : {kPi / 8, kPi / 4, 3 * kPi / 8, 7 * kPi / 16}) {
        const SectorFit f = sector_lambda_fit(th, 100);
        CHECK(f.min_re_lambda > 0.0);
        CHECK(std::isfinite(f.C1));
        CHECK(std::isfinite(f.C2));
    }
}

TEST_CASE("domination modulus is independent of the point") {
    for (double th : {kPi / 8, 7 * kPi / 16}) {
        const DominationFit f = domination_fit(th, 100, 6.0);
        CHECK(f.max_modulus_deviation < 1e-10);
        CHECK(f.C_growth <= 1.0 + 1e-12);
        CHECK(std::isfinite(f.C));
    }
}

TEST_CASE("domination constant tracks the sector weight") {
    // Frozen from the fit: C(theta) is proportional to (pi/2 - theta) to within
    // a factor 2, which is what makes the spread across theta large.
    const double c1 = domination_fit(kPi / 8, 200, 6.0).C;
    const double c4 = domination_fit(7 * kPi / 16, 200, 6.0).C;
    CHECK(c1 == doctest::Approx(1.393).epsilon(2e-3));
    CHECK(c4 == doctest::Approx(0.104).epsilon(1e-2));
    CHECK(c1 / c4 > 4.0);
}

TEST_CASE("square function identity") {
    const HermiteBackend hb(16);
    const Vector f = random_low_mode(hb, 3);
    CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const SquareFunction sq = square_function(hb, 1.5, 10, f, 20000, 7);
    CHECK(sq.exact <= sq.norm2);
    CHECK(std::abs(sq.mc / sq.exact - 1.0) < 0.05);
    const std::vector<double> s{1.0, 2.0};
    CHECK(square_function_check(hb, s, 10, 5, 20000, 1).passed());
}

TEST_CASE("dyadic symbols") {
    const PhaseGrid g = make_phase_grid(64);
    const std::vector<int> eps{1, -1, 1};
    CHECK(dyadic_terms(eps, 1.0).size() == 3);
    CHECK(telescoped_sup(g, eps, 1.0) <= 1.0 + 1e-9);
    const std::vector<int> ones(8, 1);
    CHECK(telescoped_sup(g, ones, 2.0) <= 1.0 + 1e-9);
    CHECK(dyadic_seminorm(g, eps, 1.0, 2, 1) > 0.0);
    const std::vector<int> ks{1, 5, 10, 20};
    const std::vector<double> ss{1.0, 2.0};
    CHECK(dyadic_symbol_uniformity(g, ks, 2, ss, 9).passed());
}

TEST_CASE("mehler eigencheck") {
    const HermiteBackend hb(16);
    const std::vector<cplx> ts{0.25, 1.0, 4.0, cplx(1.0, 1.0)};
    CHECK(mehler_eigencheck(hb, ts) < 1e-10);
}

TEST_CASE("polynomial derivative scaling") {
    const PhaseGrid g = make_phase_grid(128);
    const std::vector<double> ls{0.1, 0.2, 0.4};
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) CHECK(polynomial_derivative_check(g, a, b, ls).passed());
    // alpha = 1: d_xi e^{-l(x^2+xi^2)} = -2 l xi e^{...}
    const Field d = gaussian_derivative(GaussianSymbolParams{1.0, 0.3}, g, 1, 0);
    const double x = g.axis.point(70), xi = g.axis.point(50);
    CHECK(std::abs(d.at(70, 50) - (-0.6 * xi * std::exp(-0.3 * (x * x + xi * xi)))) < 1e-14);
}

TEST_CASE("gaussian pair growth") {
    const GaussianPairBackend bk(make_state_grid(64));
    std::vector<double> ts;
    for (int n = 1; n <= 4; ++n) ts.push_back(n * bk.grid().h / std::sqrt(2.0));
    CHECK(gaussian_pair_growth(bk, ts).passed());
}
