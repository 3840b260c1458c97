#include "wcl/io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "wcl/errors.hpp"

namespace wcl {
namespace {

constexpr std::size_t kMagicSize = 16;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
}

void put_f64(std::string& out, double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
}

std::uint32_t get_u32(const std::string& in, std::size_t& pos) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += 4;
    return v;
}

double get_f64(const std::string& in, std::size_t& pos) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += 8;
    return std::bit_cast<double>(v);
}

std::string magic(const char* tag) {
    std::string m(kMagicSize, '\0');
    std::memcpy(m.data(), tag, std::strlen(tag));
    return m;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void dump(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write to " + path.string());
}

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

void write_field(const std::filesystem::path& path, const Field& f) {
    if (f.values.size() != f.grid.size()) throw ShapeError("write_field: length does not match grid");
    const int d = f.space == Space::phase ? f.grid.d / 2 : f.grid.d;
    std::string out = magic("WCLFIELD");
    put_u32(out, static_cast<std::uint32_t>(d));
    put_u32(out, static_cast<std::uint32_t>(f.grid.N));
    for (const cplx& z : f.values) {
        put_f64(out, z.real());
        put_f64(out, z.imag());
    }
    dump(path, out);
}

Field read_field(const std::filesystem::path& path) {
    std::string in = slurp(path);
    if (in.size() < kMagicSize + 8 || in.compare(0, kMagicSize, magic("WCLFIELD")) != 0)
        throw IoError(path.string() + ": not a WCLFIELD file");
    std::size_t pos = kMagicSize;
    const auto d = static_cast<int>(get_u32(in, pos));
    const auto N = static_cast<int>(get_u32(in, pos));
    if ((in.size() - pos) % 16 != 0) throw IoError(path.string() + ": truncated payload");
    const std::size_t count = (in.size() - pos) / 16;
    if (d < 1 || d > 2) throw IoError(path.string() + ": unsupported d=" + std::to_string(d));

    Field f;
    if (count == ipow(static_cast<std::size_t>(N), d)) {
        f.grid = make_state_grid(N, d);
        f.space = Space::state;
    } else if (d == 1 && count == ipow(static_cast<std::size_t>(N), 2)) {
        f.grid = make_phase_grid(N).as_state_grid();
        f.space = Space::phase;
    } else {
        throw IoError(path.string() + ": payload of " + std::to_string(count) + " values fits neither N^d nor N^{2d}");
    }
    f.values.resize(count);
    for (auto& z : f.values) {
        double re = get_f64(in, pos);
        double im = get_f64(in, pos);
        z = cplx(re, im);
    }
    return f;
}

void write_matrix(const std::filesystem::path& path, const Matrix& M) {
    std::string out = magic("WCLMATRX");
    put_u32(out, static_cast<std::uint32_t>(M.rows()));
    put_u32(out, static_cast<std::uint32_t>(M.cols()));
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            put_f64(out, M(i, j).real());
            put_f64(out, M(i, j).imag());
        }
    dump(path, out);
}

Matrix read_matrix(const std::filesystem::path& path) {
    std::string in = slurp(path);
    if (in.size() < kMagicSize + 8 || in.compare(0, kMagicSize, magic("WCLMATRX")) != 0)
        throw IoError(path.string() + ": not a WCLMATRX file");
    std::size_t pos = kMagicSize;
    const auto rows = get_u32(in, pos);
    const auto cols = get_u32(in, pos);
    if (in.size() - pos != static_cast<std::size_t>(rows) * cols * 16)
        throw IoError(path.string() + ": payload size does not match header");
    Matrix M(rows, cols);
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            double re = get_f64(in, pos);
            double im = get_f64(in, pos);
            M(i, j) = cplx(re, im);
        }
    return M;
}

}  // namespace wcl
