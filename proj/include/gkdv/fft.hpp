#pragma once

#include <complex>
#include <span>

namespace gkdv::fft {

// Unnormalized DFTs, forward kernel e^{-2pi i jk/n}, inverse e^{+2pi i jk/n}.
// in and out must have the same size; in-place (in.data() == out.data()) is allowed.
// Thread-safe: plans are cached per thread, planner calls are serialized.
void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
void inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

}  // namespace gkdv::fft
