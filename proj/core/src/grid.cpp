#include "wcl/grid.hpp"

#include <cmath>
#include <string>

#include "wcl/errors.hpp"

namespace wcl {

std::vector<double> StateGrid::points() const {
    std::vector<double> p(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) p[k] = point(k);
    return p;
}

std::size_t StateGrid::size() const {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(N);
    return n;
}

StateGrid make_state_grid(int N, int d) {
    if (d != 1 && d != 2) throw InvalidGrid("grid dimension must be 1 or 2, got " + std::to_string(d));
    if (N < 8 || N % 2 != 0)
        throw InvalidGrid("grid size must be even and >= 8, got " + std::to_string(N));
    return StateGrid{d, N, std::sqrt(2.0 * kPi / N)};
}

PhaseGrid make_phase_grid(int N) { return PhaseGrid{make_state_grid(N, 1)}; }

Field Field::zeros(const StateGrid& g, Space s) {
    return Field{g, s, std::vector<cplx>(g.size(), cplx{0.0, 0.0})};
}

Field Field::zeros(const PhaseGrid& g) { return zeros(g.as_state_grid(), Space::phase); }

PhaseGrid Field::phase_grid() const {
    if (space != Space::phase || grid.d != 2) throw ShapeError("field is not a d=1 phase-space field");
    return PhaseGrid{StateGrid{1, grid.N, grid.h}};
}

Eigen::Map<RowMajorMatrix> as_matrix(Field& f) {
    if (f.grid.d != 2) throw ShapeError("as_matrix needs a two-axis field");
    return {f.values.data(), f.grid.N, f.grid.N};
}

Eigen::Map<const RowMajorMatrix> as_matrix(const Field& f) {
    if (f.grid.d != 2) throw ShapeError("as_matrix needs a two-axis field");
    return {f.values.data(), f.grid.N, f.grid.N};
}

void require_same_grid(const Field& a, const Field& b, const char* what) {
    if (!(a.grid == b.grid) || a.values.size() != b.values.size())
        throw ShapeError(std::string(what) + ": grid mismatch");
}

}  // namespace wcl
