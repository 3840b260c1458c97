#pragma once

#include <filesystem>

#include "wcl/grid.hpp"

namespace wcl {

// Field file: "WCLFIELD" padded to 16 bytes, u32 d, u32 N, then N^d (state)
// or N^{2d} (phase) complex values as little-endian float64 (re, im) pairs.
void write_field(const std::filesystem::path& path, const Field& f);
Field read_field(const std::filesystem::path& path);

// Matrix file: "WCLMATRX" padded to 16 bytes, u32 rows, u32 cols, row-major
// complex values as little-endian float64 pairs.
void write_matrix(const std::filesystem::path& path, const Matrix& M);
Matrix read_matrix(const std::filesystem::path& path);

}  // namespace wcl
