#pragma once

#include <cstdint>

#include "wcl/linalg.hpp"
#include "wcl/pairs.hpp"
#include "wcl/report.hpp"
#include "wcl/symbol.hpp"

namespace wcl {

// How g(x - y, xi - eta) is read outside the box.
//   zero:     treated as 0 (the continuous integral on a truncated box)
//   periodic: indices wrap, with the phase of the torus realization used by
//             the twisted standard pair, so C_ahat = a(A, B) holds exactly
enum class Wrap { zero, periodic };

// C_k g(x, xi) = (1/N) sum_{y, eta} e^{i(x eta - y xi)/2} k(y, eta) g(x - y, xi - eta)
// on a phase grid (the 2pi^{-1} dy deta quadrature).
Field twisted_convolve(const Field& k, const Field& g, Wrap wrap = Wrap::zero);
Field twisted_convolve_adjoint(const Field& k, const Field& g, Wrap wrap = Wrap::zero);

// Matrix-free C_k on vectors of length N^2.
LinearOperator twisted_operator(const Field& k, Wrap wrap);

// Dense N^2 x N^2 matrix of C_k.
Matrix twisted_matrix(const Field& k, Wrap wrap);

// ||C_k|| by a dense eigensolve (the top singular values of the periodic
// operator form a cluster of width ~1e-6 at N = 32).
double twisted_norm(const Field& k, Wrap wrap);

// Random complex fields supported in |x|, |xi| <= L/4.
Field random_windowed_field(const PhaseGrid& g, std::uint64_t seed);

// Fraction of l2 mass outside |x|, |xi| <= L/4.
double wrap_guard_leak(const Field& g);

// max over random fields of ||C_ahat g - a(A,B) g|| / ||g||, twisted pair on g's grid.
VerificationReport untwist_check(const Symbol& a, const PhaseGrid& g, int trials, std::uint64_t seed,
                                 double tol = 1e-6);

struct NormEquality {
    double nc = 0.0;  // ||C_ahat|| on the N x N phase grid
    double nw = 0.0;  // ||a(Q, P)|| on the N-point standard grid
    double ratio = 0.0;
    VerificationReport report;
};

NormEquality norm_equality_check(const Symbol& a, int N, double tol = 0.05);

// ||a(A,B)|| <= M_A^2 M_B^2 ||C_ahat|| (1 + slack), C on an N x N phase grid.
VerificationReport transference_check(const WeylBackend& bk, const Symbol& a, int N, double slack = 0.05);

}  // namespace wcl
