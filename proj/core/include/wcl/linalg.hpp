#pragma once

#include <cstdint>
#include <functional>

#include "wcl/errors.hpp"
#include "wcl/grid.hpp"

namespace wcl {

inline constexpr std::uint64_t kPowerIterationSeed = 0x57434c2d706f7765ULL;

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double last_estimate, Vector last_iterate)
        : Error(msg), last_estimate_(last_estimate), last_iterate_(std::move(last_iterate)) {}

    double last_estimate() const { return last_estimate_; }
    const Vector& last_iterate() const { return last_iterate_; }

private:
    double last_estimate_;
    Vector last_iterate_;
};

struct LinearOperator {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    std::function<Vector(const Vector&)> apply;
    std::function<Vector(const Vector&)> apply_adjoint;
};

// Largest singular value by power iteration on M^* M from a seeded random start.
// Stops when the eigen-residual of M^* M is below rel_tol times the estimate.
double operator_norm(const Matrix& M, double rel_tol = 1e-10, int max_iter = 20000);
double operator_norm(const LinearOperator& op, double rel_tol = 1e-10, int max_iter = 20000);

// Dense SVD reference.
double operator_norm_svd(const Matrix& M);

// Dense Hermitian eigensolve: of M itself when M is Hermitian, else of M^* M.
// For operators whose top singular values cluster too tightly for power
// iteration.
double operator_norm_dense(const Matrix& M);

}  // namespace wcl
