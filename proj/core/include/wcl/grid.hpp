#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace wcl {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;  // OperatorMatrix
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Centered self-dual lattice x_k = (k - N/2) h with N h^2 = 2 pi, per axis.
struct StateGrid {
    int d = 1;
    int N = 0;
    double h = 0.0;

    double point(int k) const { return (k - N / 2) * h; }
    std::vector<double> points() const;
    std::size_t size() const;
    double extent() const { return N * h; }

    friend bool operator==(const StateGrid&, const StateGrid&) = default;
};

// N must be even and >= 8. Non power-of-two sizes are accepted (48 is used
// for refinement studies); FFTW handles them.
StateGrid make_state_grid(int N, int d = 1);

// Phase space (x, xi) for d = 1: an N x N array, x is the row index.
struct PhaseGrid {
    StateGrid axis;

    int N() const { return axis.N; }
    double h() const { return axis.h; }
    std::size_t size() const { return static_cast<std::size_t>(axis.N) * axis.N; }
    StateGrid as_state_grid() const { return StateGrid{2, axis.N, axis.h}; }

    friend bool operator==(const PhaseGrid&, const PhaseGrid&) = default;
};

PhaseGrid make_phase_grid(int N);

enum class Space { state, phase };

// Complex samples on a grid, row-major. A phase field of d = 1 is stored on a
// two-axis grid.
struct Field {
    StateGrid grid;
    Space space = Space::state;
    std::vector<cplx> values;

    static Field zeros(const StateGrid& g, Space s = Space::state);
    static Field zeros(const PhaseGrid& g);

    int rank() const { return grid.d; }
    std::size_t size() const { return values.size(); }
    PhaseGrid phase_grid() const;

    cplx& at(int k, int m) { return values[static_cast<std::size_t>(k) * grid.N + m]; }
    cplx at(int k, int m) const { return values[static_cast<std::size_t>(k) * grid.N + m]; }

    Eigen::Map<Vector> vec() { return {values.data(), static_cast<Eigen::Index>(values.size())}; }
    Eigen::Map<const Vector> vec() const {
        return {values.data(), static_cast<Eigen::Index>(values.size())};
    }
};

using RowMajorMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// View of a two-axis field as an N x N matrix (row = first axis).
Eigen::Map<RowMajorMatrix> as_matrix(Field& f);
Eigen::Map<const RowMajorMatrix> as_matrix(const Field& f);

template <class Fn>
Field sample_phase(const PhaseGrid& g, Fn&& fn) {
    Field out = Field::zeros(g);
    for (int k = 0; k < g.N(); ++k)
        for (int m = 0; m < g.N(); ++m) out.at(k, m) = fn(g.axis.point(k), g.axis.point(m));
    return out;
}

template <class Fn>
Field sample_state(const StateGrid& g, Fn&& fn) {
    Field out = Field::zeros(g);
    for (int k = 0; k < g.N; ++k) out.values[k] = fn(g.point(k));
    return out;
}

void require_same_grid(const Field& a, const Field& b, const char* what);

}  // namespace wcl
