#include "gkdv/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gkdv {

static_assert(std::endian::native == std::endian::little,
              "snapshot IO assumes a little-endian host");

namespace {

template <typename T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("snapshot: truncated stream");
    return v;
}

}  // namespace

void write_snapshot(const SpectralField& field, std::ostream& out) {
    out.write("GKDV", 4);
    put<std::uint8_t>(out, 0x01);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(field.grid.modes));
    put<double>(out, field.grid.period);
    std::uint8_t flags = 0;
    if (field.real) flags |= 0x01;
    if (field.mean_zero) flags |= 0x02;
    put<std::uint8_t>(out, flags);
    for (const auto& c : field.coeffs) {
        put<double>(out, c.real());
        put<double>(out, c.imag());
    }
    if (!out) throw std::runtime_error("snapshot: write failed");
}

void write_snapshot(const SpectralField& field, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path.string());
    write_snapshot(field, out);
}

SpectralField read_snapshot(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "GKDV", 4) != 0)
        throw std::runtime_error("snapshot: bad magic");
    if (get<std::uint8_t>(in) != 0x01) throw std::runtime_error("snapshot: unknown version");
    const auto m = get<std::uint32_t>(in);
    const auto lambda = get<double>(in);
    const auto flags = get<std::uint8_t>(in);
    SpectralField f{TorusGrid(lambda, static_cast<int>(m))};
    for (auto& c : f.coeffs) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        c = {re, im};
    }
    f.real = flags & 0x01;
    f.mean_zero = flags & 0x02;
    return f;
}

SpectralField read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path.string());
    return read_snapshot(in);
}

}  // namespace gkdv
