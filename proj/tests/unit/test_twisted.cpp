#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "wcl/calculus.hpp"
#include "wcl/errors.hpp"
#include "wcl/fourier.hpp"
#include "wcl/twisted.hpp"

using namespace wcl;

TEST_CASE("zero-wrap twisted convolution matches the direct sum") {
    const PhaseGrid g = make_phase_grid(12);
    const Field k = dft_centered(sample(GaussianSymbolParams{1.0, 0.6}, g));
    const Field f = random_windowed_field(g, 2);
    const Field c = twisted_convolve(k, f, Wrap::zero);
    CHECK((c.vec() - oracle::twisted_zero(k, f).vec()).norm() < 1e-12);
}

TEST_CASE("adjoint pairs with the forward map") {
    const PhaseGrid g = make_phase_grid(16);
    const Field k = dft_centered(sample(GaussianSymbolParams{cplx(1.0, 0.5), 0.4}, g));
    const Field f = random_windowed_field(g, 3);
    const Field h = random_windowed_field(g, 4);
    for (Wrap w : {Wrap::zero, Wrap::periodic}) {
        const cplx lhs = h.vec().dot(twisted_convolve(k, f, w).vec());
        const cplx rhs = twisted_convolve_adjoint(k, h, w).vec().dot(f.vec());
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
    const Matrix M = twisted_matrix(k, Wrap::periodic);
    CHECK((M * f.vec() - twisted_convolve(k, f, Wrap::periodic).vec()).norm() < 1e-12);
}

TEST_CASE("delta kernel acts as the identity") {
    const PhaseGrid g = make_phase_grid(16);
    Field k = Field::zeros(g);
    k.at(8, 8) = static_cast<double>(g.N());  // (1/N) weight at the origin
    const Field f = random_windowed_field(g, 5);
    CHECK((twisted_convolve(k, f, Wrap::periodic).vec() - f.vec()).norm() < 1e-12);
}

TEST_CASE("untwisting identity") {
    const PhaseGrid g = make_phase_grid(16);
    const auto rep = untwist_check(mehler_symbol(1.0), g, 3, 11);
    CHECK(rep.passed());
    CHECK(wrap_guard_leak(random_windowed_field(g, 1)) == 0.0);
}

TEST_CASE("norm equality at small size") {
    const auto ne = norm_equality_check(mehler_symbol(1.0), 16);
    CHECK(ne.report.passed());
    CHECK(ne.nw == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("transference on the grid pair") {
    const StateGrid g = make_state_grid(32);
    const GridStandardBackend bk(g);
    CHECK(transference_check(bk, mehler_symbol(1.0), 16).passed());
}

TEST_CASE("shape errors") {
    const Field a = Field::zeros(make_phase_grid(8));
    const Field b = Field::zeros(make_phase_grid(16));
    CHECK_THROWS_AS(twisted_convolve(a, b), ShapeError);
    CHECK_THROWS_AS(twisted_convolve(a, Field::zeros(make_state_grid(8))), ShapeError);
}
