#include "wcl/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wcl/calculus.hpp"
#include "wcl/errors.hpp"
#include "wcl/fourier.hpp"

namespace wcl {
namespace {

constexpr cplx I{0.0, 1.0};

// On the self-dual lattice (x eta)/2 = pi cx ceta / N, so every phase is a
// power of e^{i pi / N}.
std::vector<cplx> phase_table(int N) {
    std::vector<cplx> t(static_cast<std::size_t>(2 * N));
    for (int j = 0; j < 2 * N; ++j) t[j] = std::exp(I * (kPi * j / N));
    return t;
}

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// Centered index in [-N/2, N/2) for an arbitrary integer.
int wrap_centered(int c, int N) { return mod(c + N / 2, N) - N / 2; }

// Calls emit(dst, src, c) for every term c g[src] of (C_k g)[dst].
template <class Emit>
void for_each_term(const Field& k, Wrap wrap, Emit&& emit) {
    const int N = k.grid.N;
    const int H = N / 2;
    const auto tab = phase_table(N);
    const double scale = 1.0 / N;
    for (int iu = 0; iu < N; ++iu) {
        const int cu = iu - H;
        for (int iv = 0; iv < N; ++iv) {
            const cplx w = k.at(iu, iv) * scale;
            if (w == cplx(0.0)) continue;
            const int cv = iv - H;
            for (int ix = 0; ix < N; ++ix) {
                const int cx = ix - H;
                int sx = cx - cu;
                if (wrap == Wrap::zero) {
                    if (sx < -H || sx >= H) continue;
                } else {
                    sx = wrap_centered(sx, N);
                }
                // zero: cx cv - cu cxi; periodic: cu cv - cu cxi + cv sx.
                const long long px = wrap == Wrap::zero ? static_cast<long long>(cx) * cv
                                                        : static_cast<long long>(cu) * cv + static_cast<long long>(cv) * sx;
                const std::size_t row = static_cast<std::size_t>(ix) * N;
                const std::size_t src_row = static_cast<std::size_t>(sx + H) * N;
                for (int ixi = 0; ixi < N; ++ixi) {
                    const int cxi = ixi - H;
                    int sxi = cxi - cv;
                    if (wrap == Wrap::zero) {
                        if (sxi < -H || sxi >= H) continue;
                    } else {
                        sxi = wrap_centered(sxi, N);
                    }
                    emit(row + ixi, src_row + (sxi + H), w * tab[mod(px - static_cast<long long>(cu) * cxi, 2 * N)]);
                }
            }
        }
    }
}

void require_phase_pair(const Field& k, const Field& g) {
    if (k.space != Space::phase || g.space != Space::phase) throw ShapeError("twisted convolution needs phase fields");
    require_same_grid(k, g, "twisted_convolve");
}

Field kernel_of(const Symbol& a, const PhaseGrid& g) { return dft_centered(sample(a, g)); }

}  // namespace

Field twisted_convolve(const Field& k, const Field& g, Wrap wrap) {
    require_phase_pair(k, g);
    Field out = Field::zeros(k.phase_grid());
    for_each_term(k, wrap, [&](std::size_t dst, std::size_t src, cplx c) { out.values[dst] += c * g.values[src]; });
    return out;
}

Field twisted_convolve_adjoint(const Field& k, const Field& g, Wrap wrap) {
    require_phase_pair(k, g);
    Field out = Field::zeros(k.phase_grid());
    for_each_term(k, wrap,
                  [&](std::size_t dst, std::size_t src, cplx c) { out.values[src] += std::conj(c) * g.values[dst]; });
    return out;
}

Matrix twisted_matrix(const Field& k, Wrap wrap) {
    if (k.space != Space::phase) throw ShapeError("twisted_matrix needs a phase kernel");
    const auto n = static_cast<Eigen::Index>(k.size());
    Matrix M = Matrix::Zero(n, n);
    for_each_term(k, wrap, [&](std::size_t dst, std::size_t src, cplx c) {
        M(static_cast<Eigen::Index>(dst), static_cast<Eigen::Index>(src)) += c;
    });
    return M;
}

double twisted_norm(const Field& k, Wrap wrap) { return operator_norm_dense(twisted_matrix(k, wrap)); }

LinearOperator twisted_operator(const Field& k, Wrap wrap) {
    if (k.space != Space::phase) throw ShapeError("twisted_operator needs a phase kernel");
    const auto n = static_cast<Eigen::Index>(k.size());
    auto lift = [k](const Vector& x) {
        Field f = Field::zeros(k.phase_grid());
        f.vec() = x;
        return f;
    };
    LinearOperator op;
    op.rows = n;
    op.cols = n;
    op.apply = [k, wrap, lift](const Vector& x) { return Vector(twisted_convolve(k, lift(x), wrap).vec()); };
    op.apply_adjoint = [k, wrap, lift](const Vector& x) {
        return Vector(twisted_convolve_adjoint(k, lift(x), wrap).vec());
    };
    return op;
}

Field random_windowed_field(const PhaseGrid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    const double q = g.axis.extent() / 4.0;
    auto win = plateau_bump(0.5 * q, q);
    Field f = Field::zeros(g);
    for (int k = 0; k < g.N(); ++k)
        for (int m = 0; m < g.N(); ++m) {
            const double re = nd(rng), im = nd(rng);
            const cplx w = win(g.axis.point(k), 0.0) * win(0.0, g.axis.point(m));
            f.at(k, m) = w * cplx(re, im);
        }
    return f;
}

double wrap_guard_leak(const Field& g) {
    const PhaseGrid pg = g.phase_grid();
    const double q = pg.axis.extent() / 4.0;
    double out = 0.0, total = 0.0;
    for (int k = 0; k < pg.N(); ++k)
        for (int m = 0; m < pg.N(); ++m) {
            const double e = std::norm(g.at(k, m));
            total += e;
            if (std::abs(pg.axis.point(k)) > q || std::abs(pg.axis.point(m)) > q) out += e;
        }
    return total > 0.0 ? std::sqrt(out / total) : 0.0;
}

VerificationReport untwist_check(const Symbol& a, const PhaseGrid& g, int trials, std::uint64_t seed, double tol) {
    VerificationReport rep;
    const Field k = kernel_of(a, g);
    TwistedStandardBackend bk(g.as_state_grid());
    const Matrix W = quantize(bk, sample(a, g));
    double worst = 0.0, leak = 0.0;
    for (int i = 0; i < trials; ++i) {
        const Field f = random_windowed_field(g, seed + static_cast<std::uint64_t>(i));
        leak = std::max(leak, wrap_guard_leak(f));
        const Field c = twisted_convolve(k, f, Wrap::periodic);
        const double r = (c.vec() - W * f.vec()).norm() / f.vec().norm();
        worst = std::max(worst, r);
    }
    rep.set("N", g.N());
    rep.set("trials", trials);
    rep.set("wrap_guard_leak", leak);
    rep.check("max_relative_residual", worst, tol);
    return rep;
}

NormEquality norm_equality_check(const Symbol& a, int N, double tol) {
    NormEquality out;
    const PhaseGrid g = make_phase_grid(N);
    out.nc = twisted_norm(kernel_of(a, g), Wrap::periodic);
    GridStandardBackend bk(make_state_grid(N, 1));
    out.nw = operator_norm(quantize(bk, sample(a, g)), 1e-12);
    out.ratio = out.nc / out.nw;
    out.report.set("N", N);
    out.report.set("nc", out.nc);
    out.report.set("nw", out.nw);
    out.report.set("ratio", out.ratio);
    out.report.check("gap", std::abs(out.ratio - 1.0), tol);
    return out;
}

VerificationReport transference_check(const WeylBackend& bk, const Symbol& a, int N, double slack) {
    VerificationReport rep;
    const PhaseGrid g = make_phase_grid(N);
    const double nc = twisted_norm(kernel_of(a, g), Wrap::periodic);
    const double na = bk.state_norm(quantize(bk, a));
    std::vector<double> ts;
    for (int j = -4; j <= 4; ++j) ts.push_back(j * g.h());
    const auto gb = group_bounds(bk, ts);
    const double bound = gb.M_A * gb.M_A * gb.M_B * gb.M_B * nc * (1.0 + slack);
    rep.set("backend", std::string(to_string(bk.kind())));
    rep.set("norm", na);
    rep.set("M_A", gb.M_A);
    rep.set("M_B", gb.M_B);
    rep.set("twisted_norm", nc);
    rep.check_le("norm_over_bound", na / bound, 1.0);
    return rep;
}

}  // namespace wcl
