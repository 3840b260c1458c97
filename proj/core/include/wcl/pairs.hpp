#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcl/grid.hpp"
#include "wcl/report.hpp"

namespace wcl {

enum class BackendKind { grid_standard, hermite, gaussian_measure, twisted_standard, skewed };

std::string_view to_string(BackendKind k);
BackendKind backend_kind_from_string(std::string_view s);

// Text form, one `key = value` per line:
//   kind = hermite / n_max = 16 / lambda = 0 / seed = 0 / base = grid-standard
struct BackendDescriptor {
    BackendKind kind = BackendKind::grid_standard;
    int N = 0;
    int n_max = 0;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    std::optional<BackendKind> base;  // skewed only; base grid uses N / n_max

    std::string to_text() const;
    static BackendDescriptor parse(std::string_view text);
    // grid:N | hermite:n | gaussian:N | twisted:N | skewed:lambda:grid:N | skewed:lambda:hermite:n
    static BackendDescriptor parse_short(std::string_view spec);
};

// One v-column of a quantization sum: sum_j w_j e^{i(u_j A + v B)}.
struct SpectralColumn {
    double v = 0.0;
    std::vector<double> u;
    std::vector<cplx> w;
};
using SpectralSet = std::vector<SpectralColumn>;

class WeylBackend {
public:
    virtual ~WeylBackend() = default;

    virtual BackendKind kind() const = 0;
    virtual int d() const { return 1; }
    virtual Eigen::Index state_dim() const = 0;
    virtual Matrix group_A(std::span<const double> u) const = 0;
    virtual Matrix group_B(std::span<const double> v) const = 0;
    virtual BackendDescriptor descriptor() const = 0;

    // Leading basis vectors on which identities are asserted.
    virtual Eigen::Index trusted_dim() const { return state_dim(); }
    virtual double group_tolerance() const { return 1e-10; }
    // Phase grid whose dual lattice the backend quantizes on, if any.
    virtual std::optional<PhaseGrid> phase_grid() const { return std::nullopt; }

    // Dense sum of w e^{i(uA + vB)} over the set; backends override with
    // structured evaluations.
    virtual Matrix quantize_spectrum(const SpectralSet& s) const;

    // Operator norm in the backend's own state norm (L^p of its measure).
    virtual double state_norm(const Matrix& M, int p = 2) const;

    Matrix group_A(double u) const { return group_A(std::span<const double>(&u, 1)); }
    Matrix group_B(double v) const { return group_B(std::span<const double>(&v, 1)); }
};

using BackendPtr = std::shared_ptr<const WeylBackend>;

// Band-limited periodic shift on a one-axis grid: (S f)(x_k) = f(x_k + s).
// Exact permutation when s is a lattice multiple.
Matrix grid_shift(const StateGrid& g, double s);

class GridStandardBackend final : public WeylBackend {
public:
    explicit GridStandardBackend(StateGrid g);
    using WeylBackend::group_A;
    using WeylBackend::group_B;
    BackendKind kind() const override { return BackendKind::grid_standard; }
    int d() const override { return g_.d; }
    Eigen::Index state_dim() const override { return static_cast<Eigen::Index>(g_.size()); }
    Matrix group_A(std::span<const double> u) const override;
    Matrix group_B(std::span<const double> v) const override;
    BackendDescriptor descriptor() const override;
    std::optional<PhaseGrid> phase_grid() const override;
    Matrix quantize_spectrum(const SpectralSet& s) const override;
    const StateGrid& grid() const { return g_; }

private:
    StateGrid g_;
};

// Truncated number basis. Matrices live on a working space of n_max + 1 +
// padding modes so that modes n <= n_max are unaffected by the cut.
class HermiteBackend final : public WeylBackend {
public:
    static constexpr int kPadding = 112;

    explicit HermiteBackend(int n_max);
    using WeylBackend::group_A;
    using WeylBackend::group_B;
    BackendKind kind() const override { return BackendKind::hermite; }
    Eigen::Index state_dim() const override { return dim_; }
    Eigen::Index trusted_dim() const override { return n_max_ - 3; }
    double group_tolerance() const override { return 1e-6; }
    Matrix group_A(std::span<const double> u) const override;
    Matrix group_B(std::span<const double> v) const override;
    BackendDescriptor descriptor() const override;
    Matrix quantize_spectrum(const SpectralSet& s) const override;

    int n_max() const { return n_max_; }
    const Matrix& Q() const { return Q_; }
    const Matrix& P() const { return P_; }
    Matrix L() const;  // (Q^2 + P^2)/2 - 1/2
    Vector mode(int n) const;
    double q_radius() const { return q_eval_.cwiseAbs().maxCoeff(); }

private:
    int n_max_;
    Eigen::Index dim_;
    Matrix Q_, P_;
    Eigen::VectorXd q_eval_, p_eval_;
    Matrix q_vec_, p_vec_, q_to_p_;
};

// Pair on L^2(gamma) for the standard Gaussian measure, realized on a grid by
// conjugating the grid translation with E f = e^{-x^2/4} f.
class GaussianPairBackend final : public WeylBackend {
public:
    explicit GaussianPairBackend(StateGrid g);
    using WeylBackend::group_A;
    using WeylBackend::group_B;
    BackendKind kind() const override { return BackendKind::gaussian_measure; }
    Eigen::Index state_dim() const override { return g_.N; }
    double group_tolerance() const override { return 1e-8; }
    Matrix group_A(std::span<const double> u) const override;
    Matrix group_B(std::span<const double> v) const override;
    BackendDescriptor descriptor() const override;
    double state_norm(const Matrix& M, int p = 2) const override;

    // Discrete L^p(gamma) norm with weights gamma(x_k) h.
    double weighted_norm(const Vector& f, int p) const;
    // Bumps e^{-(x-y0)^2/2}, y0 over the inner half of the box: the family
    // used for L^4 operator-norm estimates.
    std::vector<Vector> bump_family() const;
    const StateGrid& grid() const { return g_; }
    const Eigen::VectorXd& weights() const { return w_; }

private:
    StateGrid g_;
    Eigen::VectorXd w_, e_;
};

// Weyl pair (-Q2/2 - P1, Q1/2 - P2) on a two-axis grid, d = 1.
class TwistedStandardBackend final : public WeylBackend {
public:
    explicit TwistedStandardBackend(StateGrid g2);
    using WeylBackend::group_A;
    using WeylBackend::group_B;
    BackendKind kind() const override { return BackendKind::twisted_standard; }
    Eigen::Index state_dim() const override { return static_cast<Eigen::Index>(g_.size()); }
    Matrix group_A(std::span<const double> u) const override;
    Matrix group_B(std::span<const double> v) const override;
    BackendDescriptor descriptor() const override;
    std::optional<PhaseGrid> phase_grid() const override;
    Matrix quantize_spectrum(const SpectralSet& s) const override;
    const StateGrid& grid() const { return g_; }

private:
    StateGrid g_;
};

// (A, lambda A + B) with e^{it(lambda A + B)} := e^{i lambda t^2/2} e^{i lambda t A} e^{itB}.
class SkewedBackend final : public WeylBackend {
public:
    SkewedBackend(BackendPtr base, double lambda);
    using WeylBackend::group_A;
    using WeylBackend::group_B;
    BackendKind kind() const override { return BackendKind::skewed; }
    int d() const override { return base_->d(); }
    Eigen::Index state_dim() const override { return base_->state_dim(); }
    Eigen::Index trusted_dim() const override { return base_->trusted_dim(); }
    double group_tolerance() const override { return base_->group_tolerance(); }
    Matrix group_A(std::span<const double> u) const override { return base_->group_A(u); }
    Matrix group_B(std::span<const double> v) const override;
    BackendDescriptor descriptor() const override;
    std::optional<PhaseGrid> phase_grid() const override { return base_->phase_grid(); }
    Matrix quantize_spectrum(const SpectralSet& s) const override;
    double state_norm(const Matrix& M, int p = 2) const override { return base_->state_norm(M, p); }

    const WeylBackend& base() const { return *base_; }
    double lambda() const { return lambda_; }

private:
    BackendPtr base_;
    double lambda_;
};

BackendPtr standard_pair_grid(const StateGrid& g);
BackendPtr hermite_backend(int n_max, int d = 1);
BackendPtr gaussian_pair(const StateGrid& g);
BackendPtr twisted_standard_pair(const StateGrid& g2);
BackendPtr skew_transform(BackendPtr bk, double lambda);
BackendPtr make_backend(const BackendDescriptor& desc);

// e^{i(uA + vB)} := e^{i u.v / 2} e^{iuA} e^{ivB}; components applied in
// ascending index order.
Matrix weyl_exponential(const WeylBackend& bk, std::span<const double> u, std::span<const double> v);
Matrix weyl_exponential(const WeylBackend& bk, double u, double v);

// Frobenius norm of the leading trusted_dim() columns.
double trusted_residual(const WeylBackend& bk, const Matrix& D);

struct SigmaSample {
    double u, v, u2, v2;
};

// `step` multiples of h; parameters drawn uniformly from step*h*{-r..r}.
std::vector<SigmaSample> lattice_sigma_samples(double h, int count, int r, std::uint64_t seed, int step = 1);
// Uniform real samples in [-bound, bound].
std::vector<SigmaSample> box_sigma_samples(double bound, int count, std::uint64_t seed);

VerificationReport verify_sigma(const WeylBackend& bk, std::span<const SigmaSample> samples, double tol = 1e-9);

// All relations of the integrated CCR for on-lattice (s, t) pairs:
// A_j/A_k and B_j/B_k commute, e^{isA_j} e^{itB_k} = e^{-ist delta_jk} e^{itB_k} e^{isA_j}.
VerificationReport verify_ccr(const WeylBackend& bk, std::span<const std::pair<double, double>> st,
                              double tol = 1e-10);

// Max over sampled s, t of ||G(s)G(t) - G(s+t)|| on trusted columns.
double group_law_residual(const WeylBackend& bk, std::span<const double> samples, bool use_B);

struct GroupBoundEstimate {
    double M_A = 1.0;
    double M_B = 1.0;
    std::vector<double> samples;
    // False when the sup over the full sample range exceeds the sup over the
    // inner half by more than 1e-8 relative.
    bool uniform = true;
};

GroupBoundEstimate group_bounds(const WeylBackend& bk, std::span<const double> samples, int p = 2);

}  // namespace wcl
