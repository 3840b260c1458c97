#include "wcl/pairs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "wcl/errors.hpp"
#include "wcl/linalg.hpp"

namespace wcl {
namespace {

constexpr cplx I{0.0, 1.0};

// Integer n with s = n h, if s is on the lattice.
std::optional<int> lattice_steps(double s, double h) {
    double r = s / h;
    double n = std::round(r);
    if (std::abs(r - n) < 1e-9) return static_cast<int>(n);
    return std::nullopt;
}

int wrap(int k, int N) {
    int r = k % N;
    return r < 0 ? r + N : r;
}

Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return K;
}

void require_dim(std::span<const double> p, int d, const char* what) {
    if (static_cast<int>(p.size()) != d)
        throw ShapeError(std::string(what) + ": parameter has " + std::to_string(p.size()) +
                         " components, backend d = " + std::to_string(d));
}

// On-lattice shift of a whole phase-space field, used by the twisted pair.
void add_twisted_point(Matrix& M, const StateGrid& g, double u, double v, int su, int sv, cplx w) {
    const int N = g.N;
    const cplx base = w * std::exp(0.5 * I * u * v);
    std::vector<cplx> xi_phase(static_cast<std::size_t>(N)), x_phase(static_cast<std::size_t>(N));
    for (int m = 0; m < N; ++m) xi_phase[m] = std::exp(-0.5 * I * u * g.point(m));
    for (int k = 0; k < N; ++k) x_phase[k] = std::exp(0.5 * I * v * g.point(k));
    for (int k = 0; k < N; ++k) {
        const int ks = wrap(k - su, N);
        const cplx bx = base * x_phase[ks];
        for (int m = 0; m < N; ++m) {
            const int ms = wrap(m - sv, N);
            M(static_cast<Eigen::Index>(k) * N + m, static_cast<Eigen::Index>(ks) * N + ms) += bx * xi_phase[m];
        }
    }
}

}  // namespace

std::string_view to_string(BackendKind k) {
    switch (k) {
        case BackendKind::grid_standard: return "grid-standard";
        case BackendKind::hermite: return "hermite";
        case BackendKind::gaussian_measure: return "gaussian-measure";
        case BackendKind::twisted_standard: return "twisted-standard";
        case BackendKind::skewed: return "skewed";
    }
    return "unknown";
}

BackendKind backend_kind_from_string(std::string_view s) {
    for (auto k : {BackendKind::grid_standard, BackendKind::hermite, BackendKind::gaussian_measure,
                   BackendKind::twisted_standard, BackendKind::skewed})
        if (to_string(k) == s) return k;
    throw ParseError("unknown backend kind '" + std::string(s) + "'");
}

std::string BackendDescriptor::to_text() const {
    std::ostringstream os;
    os << "kind = " << to_string(kind) << "\n";
    os << "N = " << N << "\n";
    os << "n_max = " << n_max << "\n";
    os << "lambda = " << format_double(lambda) << "\n";
    os << "seed = " << seed << "\n";
    if (base) os << "base = " << to_string(*base) << "\n";
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class T>
T parse_number(std::string_view s, const char* what) {
    s = trim(s);
    T value{};
    if constexpr (std::is_floating_point_v<T>) {
        try {
            std::size_t used = 0;
            value = std::stod(std::string(s), &used);
            if (used != s.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError(std::string("bad number for ") + what + ": '" + std::string(s) + "'");
        }
    } else {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || p != s.data() + s.size())
            throw ParseError(std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

BackendDescriptor BackendDescriptor::parse(std::string_view text) {
    BackendDescriptor d;
    bool have_kind = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("descriptor line " + std::to_string(line_no) + ": expected key = value");
        auto key = trim(line.substr(0, eq));
        auto val = trim(line.substr(eq + 1));
        if (key == "kind") {
            d.kind = backend_kind_from_string(val);
            have_kind = true;
        } else if (key == "N") {
            d.N = parse_number<int>(val, "N");
        } else if (key == "n_max") {
            d.n_max = parse_number<int>(val, "n_max");
        } else if (key == "lambda") {
            d.lambda = parse_number<double>(val, "lambda");
        } else if (key == "seed") {
            d.seed = parse_number<std::uint64_t>(val, "seed");
        } else if (key == "base") {
            d.base = backend_kind_from_string(val);
        } else {
            throw ParseError("descriptor line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_kind) throw ParseError("descriptor has no kind");
    return d;
}

BackendDescriptor BackendDescriptor::parse_short(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ParseError("backend '" + std::string(spec) + "': expected kind:size");
    auto kind = spec.substr(0, colon);
    auto rest = spec.substr(colon + 1);
    BackendDescriptor d;
    if (kind == "grid") {
        d.kind = BackendKind::grid_standard;
        d.N = parse_number<int>(rest, "grid size");
    } else if (kind == "hermite") {
        d.kind = BackendKind::hermite;
        d.n_max = parse_number<int>(rest, "n_max");
    } else if (kind == "gaussian") {
        d.kind = BackendKind::gaussian_measure;
        d.N = parse_number<int>(rest, "grid size");
    } else if (kind == "twisted") {
        d.kind = BackendKind::twisted_standard;
        d.N = parse_number<int>(rest, "grid size");
    } else if (kind == "skewed") {
        auto c2 = rest.find(':');
        if (c2 == std::string_view::npos) throw ParseError("skewed backend: expected skewed:lambda:base:size");
        d = parse_short(rest.substr(c2 + 1));
        d.base = d.kind;
        d.kind = BackendKind::skewed;
        d.lambda = parse_number<double>(rest.substr(0, c2), "lambda");
    } else {
        throw ParseError("unknown backend kind '" + std::string(kind) + "'");
    }
    return d;
}

// ---------------------------------------------------------------------------

Matrix WeylBackend::quantize_spectrum(const SpectralSet& s) const {
    Matrix M = Matrix::Zero(state_dim(), state_dim());
    for (const auto& col : s)
        for (std::size_t j = 0; j < col.u.size(); ++j) M += col.w[j] * weyl_exponential(*this, col.u[j], col.v);
    return M;
}

double WeylBackend::state_norm(const Matrix& M, int p) const {
    if (p != 2) throw DomainError("state_norm: only p = 2 is defined for this backend");
    return operator_norm(M, 1e-12);
}

Matrix grid_shift(const StateGrid& g, double s) {
    if (g.d != 1) throw ShapeError("grid_shift expects a one-axis grid");
    const int N = g.N;
    Matrix S = Matrix::Zero(N, N);
    if (auto n = lattice_steps(s, g.h)) {
        for (int k = 0; k < N; ++k) S(k, wrap(k + *n, N)) = 1.0;
        return S;
    }
    // F^{-1} diag(e^{i s xi}) F is circulant in k - j.
    std::vector<cplx> c(static_cast<std::size_t>(N));
    for (int delta = 0; delta < N; ++delta) {
        cplx acc = 0.0;
        for (int m = 0; m < N; ++m) acc += std::exp(I * g.point(m) * (delta * g.h + s));
        c[delta] = acc / static_cast<double>(N);
    }
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) S(k, j) = c[wrap(k - j, N)];
    return S;
}

// --- grid standard ---------------------------------------------------------

GridStandardBackend::GridStandardBackend(StateGrid g) : g_(g) {
    if (g_.d != 1 && g_.d != 2) throw InvalidGrid("standard pair needs d = 1 or 2");
}

Matrix GridStandardBackend::group_A(std::span<const double> u) const {
    require_dim(u, g_.d, "group_A");
    const int N = g_.N;
    Vector diag(state_dim());
    if (g_.d == 1) {
        for (int k = 0; k < N; ++k) diag[k] = std::exp(I * u[0] * g_.point(k));
    } else {
        for (int k = 0; k < N; ++k)
            for (int m = 0; m < N; ++m)
                diag[static_cast<Eigen::Index>(k) * N + m] =
                    std::exp(I * u[0] * g_.point(k)) * std::exp(I * u[1] * g_.point(m));
    }
    return diag.asDiagonal();
}

Matrix GridStandardBackend::group_B(std::span<const double> v) const {
    require_dim(v, g_.d, "group_B");
    StateGrid axis{1, g_.N, g_.h};
    if (g_.d == 1) return grid_shift(axis, v[0]);
    return kron(grid_shift(axis, v[0]), grid_shift(axis, v[1]));
}

BackendDescriptor GridStandardBackend::descriptor() const {
    BackendDescriptor d;
    d.kind = BackendKind::grid_standard;
    d.N = g_.N;
    return d;
}

std::optional<PhaseGrid> GridStandardBackend::phase_grid() const {
    if (g_.d != 1) return std::nullopt;
    return PhaseGrid{g_};
}

Matrix GridStandardBackend::quantize_spectrum(const SpectralSet& s) const {
    if (g_.d != 1) return WeylBackend::quantize_spectrum(s);
    const int N = g_.N;
    Matrix M = Matrix::Zero(N, N);
    Vector diag(N);
    for (const auto& col : s) {
        diag.setZero();
        for (std::size_t j = 0; j < col.u.size(); ++j) {
            if (col.w[j] == cplx(0.0)) continue;
            const cplx c = col.w[j] * std::exp(0.5 * I * col.u[j] * col.v);
            for (int k = 0; k < N; ++k) diag[k] += c * std::exp(I * col.u[j] * g_.point(k));
        }
        if (auto n = lattice_steps(col.v, g_.h)) {
            for (int k = 0; k < N; ++k) M(k, wrap(k + *n, N)) += diag[k];
        } else {
            M += diag.asDiagonal() * grid_shift(g_, col.v);
        }
    }
    return M;
}

// --- hermite ---------------------------------------------------------------

HermiteBackend::HermiteBackend(int n_max) : n_max_(n_max) {
    if (n_max < 4) throw DomainError("hermite backend needs n_max >= 4");
    dim_ = n_max + 1 + kPadding;
    Matrix a = Matrix::Zero(dim_, dim_);
    for (Eigen::Index n = 1; n < dim_; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const double r2 = std::sqrt(2.0);
    Q_ = (a + a.adjoint()) / r2;
    P_ = (a - a.adjoint()) / (I * r2);

    Eigen::SelfAdjointEigenSolver<Matrix> qs(Q_);
    Eigen::SelfAdjointEigenSolver<Matrix> ps(P_);
    q_eval_ = qs.eigenvalues();
    q_vec_ = qs.eigenvectors();
    p_eval_ = ps.eigenvalues();
    p_vec_ = ps.eigenvectors();
    q_to_p_ = q_vec_.adjoint() * p_vec_;
}

Matrix HermiteBackend::group_A(std::span<const double> u) const {
    require_dim(u, 1, "group_A");
    Vector ph = (I * u[0] * q_eval_.cast<cplx>()).array().exp();
    return q_vec_ * ph.asDiagonal() * q_vec_.adjoint();
}

Matrix HermiteBackend::group_B(std::span<const double> v) const {
    require_dim(v, 1, "group_B");
    Vector ph = (I * v[0] * p_eval_.cast<cplx>()).array().exp();
    return p_vec_ * ph.asDiagonal() * p_vec_.adjoint();
}

BackendDescriptor HermiteBackend::descriptor() const {
    BackendDescriptor d;
    d.kind = BackendKind::hermite;
    d.n_max = n_max_;
    return d;
}

Matrix HermiteBackend::L() const {
    return 0.5 * (Q_ * Q_ + P_ * P_) - 0.5 * Matrix::Identity(dim_, dim_);
}

Vector HermiteBackend::mode(int n) const {
    if (n < 0 || n >= dim_) throw ShapeError("mode index out of range");
    Vector e = Vector::Zero(dim_);
    e[n] = 1.0;
    return e;
}

Matrix HermiteBackend::quantize_spectrum(const SpectralSet& s) const {
    // sum_u w e^{iuv/2} e^{iuQ} = V_q diag(g) V_q^*, then e^{ivP} = V_p diag V_p^*.
    Matrix T = Matrix::Zero(dim_, dim_);
    Vector g(dim_);
    for (const auto& col : s) {
        g.setZero();
        for (std::size_t j = 0; j < col.u.size(); ++j) {
            if (col.w[j] == cplx(0.0)) continue;
            const cplx c = col.w[j] * std::exp(0.5 * I * col.u[j] * col.v);
            for (Eigen::Index i = 0; i < dim_; ++i) g[i] += c * std::exp(I * col.u[j] * q_eval_[i]);
        }
        Vector ph = (I * col.v * p_eval_.cast<cplx>()).array().exp();
        T.noalias() += g.asDiagonal() * q_to_p_ * ph.asDiagonal();
    }
    return q_vec_ * T * p_vec_.adjoint();
}

// --- gaussian measure ------------------------------------------------------

GaussianPairBackend::GaussianPairBackend(StateGrid g) : g_(g) {
    if (g_.d != 1) throw InvalidGrid("gaussian pair needs a one-axis grid");
    w_.resize(g_.N);
    e_.resize(g_.N);
    for (int k = 0; k < g_.N; ++k) {
        const double x = g_.point(k);
        w_[k] = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi) * g_.h;
        e_[k] = std::exp(-0.25 * x * x);
    }
}

Matrix GaussianPairBackend::group_A(std::span<const double> u) const {
    require_dim(u, 1, "group_A");
    Vector diag(g_.N);
    for (int k = 0; k < g_.N; ++k) diag[k] = std::exp(I * u[0] * g_.point(k) / std::sqrt(2.0));
    return diag.asDiagonal();
}

Matrix GaussianPairBackend::group_B(std::span<const double> v) const {
    require_dim(v, 1, "group_B");
    Matrix S = grid_shift(g_, std::sqrt(2.0) * v[0]);
    // E^{-1} S E, entrywise so the scaling is exact to rounding.
    for (int k = 0; k < g_.N; ++k)
        for (int j = 0; j < g_.N; ++j) S(k, j) *= e_[j] / e_[k];
    return S;
}

BackendDescriptor GaussianPairBackend::descriptor() const {
    BackendDescriptor d;
    d.kind = BackendKind::gaussian_measure;
    d.N = g_.N;
    return d;
}

double GaussianPairBackend::weighted_norm(const Vector& f, int p) const {
    if (f.size() != g_.N) throw ShapeError("weighted_norm: length mismatch");
    double acc = 0.0;
    for (int k = 0; k < g_.N; ++k) acc += std::pow(std::abs(f[k]), p) * w_[k];
    return std::pow(acc, 1.0 / p);
}

std::vector<Vector> GaussianPairBackend::bump_family() const {
    std::vector<Vector> out;
    const double limit = g_.extent() / 4.0;
    for (int j = 0; j < g_.N; ++j) {
        const double y0 = g_.point(j);
        if (std::abs(y0) > limit) continue;
        Vector f(g_.N);
        for (int k = 0; k < g_.N; ++k) {
            const double z = g_.point(k) - y0;
            f[k] = std::exp(-0.5 * z * z);
        }
        out.push_back(std::move(f));
    }
    return out;
}

double GaussianPairBackend::state_norm(const Matrix& M, int p) const {
    if (p == 2) {
        Matrix S = M;
        for (int k = 0; k < g_.N; ++k)
            for (int j = 0; j < g_.N; ++j) S(k, j) *= std::sqrt(w_[k] / w_[j]);
        return operator_norm(S, 1e-12);
    }
    if (p == 4) {
        // Lower estimate over the bump family.
        double best = 0.0;
        for (const auto& f : bump_family()) best = std::max(best, weighted_norm(M * f, 4) / weighted_norm(f, 4));
        return best;
    }
    throw DomainError("gaussian pair: state_norm defined for p = 2 and p = 4 only");
}

// --- twisted ---------------------------------------------------------------

TwistedStandardBackend::TwistedStandardBackend(StateGrid g2) : g_(g2) {
    if (g_.d != 2) throw InvalidGrid("twisted standard pair lives on a two-axis grid");
}

Matrix TwistedStandardBackend::group_A(std::span<const double> u) const {
    require_dim(u, 1, "group_A");
    const int N = g_.N;
    StateGrid axis{1, N, g_.h};
    // e^{-iu xi/2} f(x - u, xi)
    Matrix A = kron(grid_shift(axis, -u[0]), Matrix::Identity(N, N));
    for (int k = 0; k < N; ++k)
        for (int m = 0; m < N; ++m)
            A.row(static_cast<Eigen::Index>(k) * N + m) *= std::exp(-0.5 * I * u[0] * g_.point(m));
    return A;
}

Matrix TwistedStandardBackend::group_B(std::span<const double> v) const {
    require_dim(v, 1, "group_B");
    const int N = g_.N;
    StateGrid axis{1, N, g_.h};
    // e^{iv x/2} f(x, xi - v)
    Matrix B = kron(Matrix::Identity(N, N), grid_shift(axis, -v[0]));
    for (int k = 0; k < N; ++k)
        for (int m = 0; m < N; ++m)
            B.row(static_cast<Eigen::Index>(k) * N + m) *= std::exp(0.5 * I * v[0] * g_.point(k));
    return B;
}

BackendDescriptor TwistedStandardBackend::descriptor() const {
    BackendDescriptor d;
    d.kind = BackendKind::twisted_standard;
    d.N = g_.N;
    return d;
}

std::optional<PhaseGrid> TwistedStandardBackend::phase_grid() const { return PhaseGrid{StateGrid{1, g_.N, g_.h}}; }

Matrix TwistedStandardBackend::quantize_spectrum(const SpectralSet& s) const {
    Matrix M = Matrix::Zero(state_dim(), state_dim());
    for (const auto& col : s) {
        auto sv = lattice_steps(col.v, g_.h);
        for (std::size_t j = 0; j < col.u.size(); ++j) {
            if (col.w[j] == cplx(0.0)) continue;
            auto su = lattice_steps(col.u[j], g_.h);
            if (su && sv)
                add_twisted_point(M, g_, col.u[j], col.v, *su, *sv, col.w[j]);
            else
                M += col.w[j] * weyl_exponential(*this, col.u[j], col.v);
        }
    }
    return M;
}

// --- skewed ----------------------------------------------------------------

SkewedBackend::SkewedBackend(BackendPtr base, double lambda) : base_(std::move(base)), lambda_(lambda) {
    if (!base_) throw DomainError("skew_transform: null backend");
}

Matrix SkewedBackend::group_B(std::span<const double> v) const {
    std::vector<double> lv(v.begin(), v.end());
    double vv = 0.0;
    for (auto& x : lv) {
        vv += x * x;
        x *= lambda_;
    }
    return std::exp(0.5 * I * lambda_ * vv) * (base_->group_A(lv) * base_->group_B(v));
}

BackendDescriptor SkewedBackend::descriptor() const {
    BackendDescriptor d = base_->descriptor();
    d.base = d.kind;
    d.kind = BackendKind::skewed;
    d.lambda = lambda_;
    return d;
}

Matrix SkewedBackend::quantize_spectrum(const SpectralSet& s) const {
    // e^{i(uA + vB')} = e^{i((u + lambda v)A + vB)} exactly.
    SpectralSet shifted = s;
    for (auto& col : shifted)
        for (auto& u : col.u) u += lambda_ * col.v;
    return base_->quantize_spectrum(shifted);
}

// ---------------------------------------------------------------------------

BackendPtr standard_pair_grid(const StateGrid& g) { return std::make_shared<GridStandardBackend>(g); }

BackendPtr hermite_backend(int n_max, int d) {
    if (d != 1) throw DomainError("hermite backend is implemented for d = 1");
    return std::make_shared<HermiteBackend>(n_max);
}

BackendPtr gaussian_pair(const StateGrid& g) { return std::make_shared<GaussianPairBackend>(g); }

BackendPtr twisted_standard_pair(const StateGrid& g2) { return std::make_shared<TwistedStandardBackend>(g2); }

BackendPtr skew_transform(BackendPtr bk, double lambda) {
    return std::make_shared<SkewedBackend>(std::move(bk), lambda);
}

BackendPtr make_backend(const BackendDescriptor& desc) {
    auto build = [&](BackendKind k) -> BackendPtr {
        switch (k) {
            case BackendKind::grid_standard: return standard_pair_grid(make_state_grid(desc.N, 1));
            case BackendKind::hermite: return hermite_backend(desc.n_max);
            case BackendKind::gaussian_measure: return gaussian_pair(make_state_grid(desc.N, 1));
            case BackendKind::twisted_standard: return twisted_standard_pair(make_state_grid(desc.N, 2));
            case BackendKind::skewed: break;
        }
        throw DomainError("skewed backend needs a non-skewed base");
    };
    if (desc.kind == BackendKind::skewed) {
        if (!desc.base) throw ParseError("skewed descriptor without base");
        return skew_transform(build(*desc.base), desc.lambda);
    }
    return build(desc.kind);
}

Matrix weyl_exponential(const WeylBackend& bk, std::span<const double> u, std::span<const double> v) {
    require_dim(u, bk.d(), "weyl_exponential");
    require_dim(v, bk.d(), "weyl_exponential");
    double uv = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) uv += u[j] * v[j];
    return std::exp(0.5 * I * uv) * (bk.group_A(u) * bk.group_B(v));
}

Matrix weyl_exponential(const WeylBackend& bk, double u, double v) {
    return weyl_exponential(bk, std::span<const double>(&u, 1), std::span<const double>(&v, 1));
}

double trusted_residual(const WeylBackend& bk, const Matrix& D) {
    return D.leftCols(std::min(bk.trusted_dim(), D.cols())).norm();
}

std::vector<SigmaSample> lattice_sigma_samples(double h, int count, int r, std::uint64_t seed, int step) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-r, r);
    std::vector<SigmaSample> out;
    out.reserve(static_cast<std::size_t>(count));
    const double q = step * h;
    for (int i = 0; i < count; ++i) {
        SigmaSample s{};
        s.u = q * dist(rng);
        s.v = q * dist(rng);
        s.u2 = q * dist(rng);
        s.v2 = q * dist(rng);
        out.push_back(s);
    }
    return out;
}

std::vector<SigmaSample> box_sigma_samples(double bound, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-bound, bound);
    std::vector<SigmaSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        SigmaSample s{};
        s.u = dist(rng);
        s.v = dist(rng);
        s.u2 = dist(rng);
        s.v2 = dist(rng);
        out.push_back(s);
    }
    return out;
}

VerificationReport verify_sigma(const WeylBackend& bk, std::span<const SigmaSample> samples, double tol) {
    VerificationReport rep;
    rep.set("backend", std::string(to_string(bk.kind())));
    rep.set("samples", static_cast<long long>(samples.size()));
    rep.set("trusted_dim", static_cast<long long>(bk.trusted_dim()));
    double worst = 0.0;
    for (const auto& s : samples) {
        Matrix lhs = weyl_exponential(bk, s.u, s.v) * weyl_exponential(bk, s.u2, s.v2);
        Matrix rhs = std::exp(0.5 * I * (s.u2 * s.v - s.u * s.v2)) * weyl_exponential(bk, s.u + s.u2, s.v + s.v2);
        worst = std::max(worst, trusted_residual(bk, lhs - rhs));
    }
    rep.check("max_residual", worst, tol);
    return rep;
}

VerificationReport verify_ccr(const WeylBackend& bk, std::span<const std::pair<double, double>> st, double tol) {
    VerificationReport rep;
    rep.set("backend", std::string(to_string(bk.kind())));
    rep.set("samples", static_cast<long long>(st.size()));
    const int d = bk.d();
    auto unit = [d](int j, double s) {
        std::vector<double> e(static_cast<std::size_t>(d), 0.0);
        e[j] = s;
        return e;
    };
    double aa = 0.0, bb = 0.0, ab = 0.0;
    for (const auto& [s, t] : st) {
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Matrix Aj = bk.group_A(unit(j, s)), Ak = bk.group_A(unit(k, t));
                Matrix Bj = bk.group_B(unit(j, s)), Bk = bk.group_B(unit(k, t));
                aa = std::max(aa, trusted_residual(bk, Aj * Ak - Ak * Aj));
                bb = std::max(bb, trusted_residual(bk, Bj * Bk - Bk * Bj));
                const cplx phase = j == k ? std::exp(-I * s * t) : cplx(1.0);
                ab = std::max(ab, trusted_residual(bk, Aj * Bk - phase * (Bk * Aj)));
            }
    }
    rep.check("residual_AA", aa, tol);
    rep.check("residual_BB", bb, tol);
    rep.check("residual_AB", ab, tol);
    return rep;
}

double group_law_residual(const WeylBackend& bk, std::span<const double> samples, bool use_B) {
    auto G = [&](double s) { return use_B ? bk.group_B(s) : bk.group_A(s); };
    double worst = 0.0;
    for (double s : samples)
        for (double t : samples) worst = std::max(worst, trusted_residual(bk, G(s) * G(t) - G(s + t)));
    return worst;
}

GroupBoundEstimate group_bounds(const WeylBackend& bk, std::span<const double> samples, int p) {
    GroupBoundEstimate est;
    est.samples.assign(samples.begin(), samples.end());
    if (samples.empty()) return est;
    double range = 0.0;
    for (double s : samples) range = std::max(range, std::abs(s));
    double inner_A = 0.0, inner_B = 0.0, all_A = 0.0, all_B = 0.0;
    for (double s : samples) {
        std::vector<double> sv(static_cast<std::size_t>(bk.d()), s);
        const double a = bk.state_norm(bk.group_A(sv), p);
        const double b = bk.state_norm(bk.group_B(sv), p);
        all_A = std::max(all_A, a);
        all_B = std::max(all_B, b);
        if (std::abs(s) <= 0.5 * range) {
            inner_A = std::max(inner_A, a);
            inner_B = std::max(inner_B, b);
        }
    }
    est.M_A = all_A;
    est.M_B = all_B;
    est.uniform = all_A <= inner_A * (1.0 + 1e-8) && all_B <= inner_B * (1.0 + 1e-8);
    return est;
}

}  // namespace wcl
