#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gkdv/grid.hpp"
#include "gkdv/multiplier.hpp"

namespace gkdv {

// Trigonometric-polynomial evaluation u(x) = (1/lambda) sum_k u_hat(k) e^{2 pi i k x / lambda}
// at arbitrary points of [0, period).
std::vector<std::complex<double>> synthesize(const SpectralField& field,
                                             std::span<const double> points);

// Samples on the uniform n-point grid x_j = j*lambda/n (n >= modes, FFT fast path).
std::vector<std::complex<double>> grid_samples(const SpectralField& field, int n = 0);

// Forward transform of samples on the uniform grid: u_hat = (lambda/M) * DFT(samples).
// Flags the result `real` when the input is conjugate-symmetric to 1e-12.
SpectralField analyze(const TorusGrid& grid, std::span<const std::complex<double>> samples);

// Band-truncating analyze from an oversampled grid (n > modes); the output
// Nyquist slot is zeroed so truncated products stay conjugate-clean.
SpectralField analyze_truncating(const TorusGrid& grid,
                                 std::span<const std::complex<double>> samples);

// P: drop the xi = 0 mode.
SpectralField project_mean_zero(const SpectralField& field);

// Airy flow: each mode multiplied by e^{2 pi i xi^3 t}.
SpectralField airy_propagate(const SpectralField& field, double t);
std::complex<double> airy_phase(double xi, double t);

// I_N^alpha: coefficient-wise multiplication by m(xi/N)^alpha.
SpectralField apply_I(const SpectralField& field, const MultiplierSymbol& sym);

// u0 on the unit torus -> lambda^{-2/3} u0(x/lambda) on the period-lambda torus.
// modes_out == 0 keeps the input mode count.
SpectralField rescale_field(const SpectralField& field, double lambda, int modes_out = 0);
// Exact inverse of rescale_field (period lambda -> unit torus).
SpectralField rescale_inverse(const SpectralField& field, int modes_out = 0);

// Real mean-zero field with independent complex Gaussian coefficients of
// standard deviation <xi>^-r, conjugate-symmetrized; Nyquist left empty.
SpectralField random_field(const TorusGrid& grid, double decay, std::uint64_t seed);

// Common reductions.
double l2_norm(const SpectralField& field);            // ||.||_{L^2(R/lambda Z)}
double mean_value(const SpectralField& field);         // u_hat(0)/lambda, real part
double max_coefficient(const SpectralField& field);
bool is_conjugate_symmetric(const SpectralField& field, double tol = 1e-12);

// Pointwise algebra used all over the test suites.
SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double c, const SpectralField& a);

}  // namespace gkdv
