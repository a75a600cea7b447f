#pragma once

#include <filesystem>
#include <iosfwd>

#include "gkdv/grid.hpp"

namespace gkdv {

// Field snapshot, bit-exact layout:
//   "GKDV" 0x01 | u32 M | f64 lambda | u8 flags (bit0 real, bit1 mean-zero) |
//   M pairs of f64 (re, im) in FFT order k = 0, 1, .., M/2, -M/2+1, .., -1.
// All values little-endian.
void write_snapshot(const SpectralField& field, std::ostream& out);
void write_snapshot(const SpectralField& field, const std::filesystem::path& path);
SpectralField read_snapshot(std::istream& in);
SpectralField read_snapshot(const std::filesystem::path& path);

}  // namespace gkdv
