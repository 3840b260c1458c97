#include "wcl/linalg.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace wcl {
namespace {

Vector seeded_start(Eigen::Index n) {
    std::mt19937_64 rng(kPowerIterationSeed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double re = dist(rng);
        double im = dist(rng);
        x[i] = cplx(re, im);
    }
    return x / x.norm();
}

}  // namespace

double operator_norm(const LinearOperator& op, double rel_tol, int max_iter) {
    if (op.cols == 0 || op.rows == 0) return 0.0;
    Vector x = seeded_start(op.cols);
    double mu = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vector y = op.apply(x);
        Vector z = op.apply_adjoint(y);
        mu = x.dot(z).real();  // Rayleigh quotient of M^* M at unit x
        if (mu <= 0.0) {
            // x is in the kernel; the operator vanishes on the seeded start.
            if (z.norm() == 0.0) return 0.0;
        }
        double r = (z - mu * x).norm();
        if (r <= rel_tol * mu) return std::sqrt(mu);
        double zn = z.norm();
        if (zn == 0.0) return 0.0;
        x = z / zn;
    }
    throw ConvergenceError("operator_norm: no convergence after " + std::to_string(max_iter) + " iterations",
                           std::sqrt(std::max(mu, 0.0)), x);
}

double operator_norm(const Matrix& M, double rel_tol, int max_iter) {
    LinearOperator op{M.rows(), M.cols(), [&M](const Vector& v) -> Vector { return M * v; },
                      [&M](const Vector& v) -> Vector { return M.adjoint() * v; }};
    return operator_norm(op, rel_tol, max_iter);
}

double operator_norm_svd(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues()(0);
}

double operator_norm_dense(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    const double scale = M.cwiseAbs().maxCoeff();
    if (M.rows() == M.cols() && (M - M.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(M, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(M.adjoint() * M, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

}  // namespace wcl
