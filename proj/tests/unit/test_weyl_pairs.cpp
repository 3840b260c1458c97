#include <doctest.h>

#include <cmath>

#include "wcl/errors.hpp"
#include "wcl/pairs.hpp"

using namespace wcl;

TEST_CASE("lattice shift is a permutation") {
    const StateGrid g = make_state_grid(16);
    const Matrix S = grid_shift(g, 3 * g.h);
    CHECK((S.cwiseAbs().rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-14);
    // (S f)(x_k) = f(x_k + 3h)
    Vector f(16);
    for (int k = 0; k < 16; ++k) f[k] = k;
    const Vector Sf = S * f;
    CHECK(std::abs(Sf[2] - cplx(5.0)) < 1e-14);
    CHECK(std::abs(Sf[15] - cplx(2.0)) < 1e-14);  // wraps
}

TEST_CASE("off-lattice shift is unitary and band-limited exact") {
    const StateGrid g = make_state_grid(32);
    const Matrix S = grid_shift(g, 0.37);
    CHECK((S.adjoint() * S - Matrix::Identity(32, 32)).norm() < 1e-12);
    // A Gaussian is band-limited to rounding on this grid.
    Vector f(32), ref(32);
    for (int k = 0; k < 32; ++k) {
        f[k] = std::exp(-0.5 * g.point(k) * g.point(k));
        const double y = g.point(k) + 0.37;
        ref[k] = std::exp(-0.5 * y * y);
    }
    CHECK((S * f - ref).norm() < 1e-10);
}

TEST_CASE("grid CCR holds exactly on the lattice") {
    const StateGrid g = make_state_grid(64);
    const GridStandardBackend bk(g);
    std::vector<std::pair<double, double>> st{{g.h, 2 * g.h}, {3 * g.h, -5 * g.h}, {-7 * g.h, 4 * g.h}};
    const auto rep = verify_ccr(bk, st);
    CHECK(rep.passed());

    const StateGrid g2 = make_state_grid(8, 2);
    std::vector<std::pair<double, double>> st2{{g2.h, 2 * g2.h}, {-3 * g2.h, g2.h}};
    CHECK(verify_ccr(GridStandardBackend(g2), st2).passed());
}

TEST_CASE("zero parameters give the identity") {
    const GridStandardBackend bk(make_state_grid(16));
    CHECK((weyl_exponential(bk, 0.0, 0.0) - Matrix::Identity(16, 16)).norm() < 1e-14);
    const HermiteBackend hb(8);
    CHECK(trusted_residual(hb, weyl_exponential(hb, 0.0, 0.0) - Matrix::Identity(hb.state_dim(), hb.state_dim())) <
          1e-14);
}

TEST_CASE("composition law on grid and hermite") {
    const StateGrid g = make_state_grid(64);
    CHECK(verify_sigma(GridStandardBackend(g), lattice_sigma_samples(g.h, 20, 10, 4), 1e-9).passed());
    CHECK(verify_sigma(HermiteBackend(16), box_sigma_samples(1.0, 20, 4), 1e-6).passed());
}

TEST_CASE("hermite generators are the oscillator") {
    const HermiteBackend hb(12);
    const Matrix L = hb.L();
    for (int n = 0; n <= 12; ++n) CHECK((L * hb.mode(n) - double(n) * hb.mode(n)).norm() < 1e-10);
    // e^{itA} is unitary on the trusted block.
    const Matrix U = hb.group_A(0.7);
    const auto K = hb.trusted_dim();
    CHECK((U.leftCols(K).adjoint() * U.leftCols(K) - Matrix::Identity(K, K)).norm() < 1e-10);
    CHECK_THROWS_AS(HermiteBackend(3), DomainError);
}

TEST_CASE("group law residuals") {
    const StateGrid g = make_state_grid(32);
    const GridStandardBackend bk(g);
    const std::vector<double> s{g.h, -2 * g.h, 5 * g.h};
    CHECK(group_law_residual(bk, s, false) < 1e-12);
    CHECK(group_law_residual(bk, s, true) < 1e-12);
    const auto gb = group_bounds(bk, s);
    CHECK(gb.M_A == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gb.M_B == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("skewed pair keeps the CCR") {
    const StateGrid g = make_state_grid(32);
    const auto sk = skew_transform(standard_pair_grid(g), 0.5);
    // lambda t^2 / 2 stays on the lattice phase for even multiples.
    std::vector<std::pair<double, double>> st{{2 * g.h, 4 * g.h}, {-4 * g.h, 2 * g.h}};
    CHECK(verify_ccr(*sk, st, 1e-9).passed());
    CHECK_THROWS_AS(skew_transform(nullptr, 1.0), DomainError);
}

TEST_CASE("twisted pair satisfies the CCR on the even sublattice") {
    const StateGrid g = make_state_grid(8, 2);
    const TwistedStandardBackend bk(g);
    std::vector<std::pair<double, double>> st{{2 * g.h, 4 * g.h}, {-6 * g.h, 2 * g.h}};
    CHECK(verify_ccr(bk, st).passed());
}

TEST_CASE("gaussian pair: isometric on L2(gamma)") {
    const GaussianPairBackend bk(make_state_grid(64));
    const double h = bk.grid().h;
    CHECK(bk.state_norm(bk.group_A(2 * h), 2) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(bk.state_norm(bk.group_B(3 * h), 2) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(bk.state_norm(bk.group_B(3 * h), 4) > bk.state_norm(bk.group_B(h), 4));
    CHECK_THROWS_AS(bk.state_norm(bk.group_B(h), 3), DomainError);
}

TEST_CASE("descriptors") {
    const auto d = BackendDescriptor::parse_short("hermite:16");
    CHECK(d.kind == BackendKind::hermite);
    CHECK(d.n_max == 16);
    const auto r = BackendDescriptor::parse(d.to_text());
    CHECK(r.kind == d.kind);
    CHECK(r.n_max == 16);

    const auto s = BackendDescriptor::parse_short("skewed:0.5:grid:32");
    CHECK(s.kind == BackendKind::skewed);
    CHECK(s.lambda == 0.5);
    CHECK(s.base == BackendKind::grid_standard);
    CHECK(make_backend(s)->state_dim() == 32);
    CHECK(make_backend(BackendDescriptor::parse_short("twisted:8"))->state_dim() == 64);

    CHECK_THROWS_AS(BackendDescriptor::parse_short("banana:4"), ParseError);
    CHECK_THROWS_AS(BackendDescriptor::parse_short("grid"), ParseError);
    CHECK_THROWS_AS(BackendDescriptor::parse("n_max = 3\n"), ParseError);
    CHECK_THROWS_AS(BackendDescriptor::parse("kind = hermite\ncolour = red\n"), ParseError);
}
