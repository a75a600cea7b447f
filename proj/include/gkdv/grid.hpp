#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace gkdv {

// Japanese bracket <x> = 1 + |x|, used by every weight in the library.
inline double bracket(double x) { return 1.0 + std::abs(x); }

// Spatial grid of a period-lambda torus holding M Fourier modes at
// frequencies k/lambda, k = -M/2+1 .. M/2.  Coefficients are stored in FFT
// order: k = 0, 1, .., M/2, -M/2+1, .., -1.
struct TorusGrid {
    double period = 1.0;
    int modes = 0;

    TorusGrid() = default;
    TorusGrid(double lambda, int m) : period(lambda), modes(m) {
        if (!(lambda >= 1.0)) throw std::invalid_argument("TorusGrid: period must be >= 1");
        if (m < 4 || m % 2 != 0) throw std::invalid_argument("TorusGrid: modes must be even and >= 4");
    }

    // signed integer index k of the FFT slot j
    int k_of(int j) const { return j <= modes / 2 ? j : j - modes; }
    int slot_of(int k) const { return k >= 0 ? k : k + modes; }
    bool holds_k(int k) const { return k > -modes / 2 && k <= modes / 2; }
    double frequency(int j) const { return k_of(j) / period; }
    int nyquist_slot() const { return modes / 2; }

    bool operator==(const TorusGrid& o) const { return period == o.period && modes == o.modes; }
    bool operator!=(const TorusGrid& o) const { return !(*this == o); }
};

// One time slice of a periodic field, stored as Fourier coefficients
// u_hat(xi) = \int_0^lambda e^{-2 pi i xi x} u(x) dx.
struct SpectralField {
    TorusGrid grid;
    std::vector<std::complex<double>> coeffs;  // FFT order, size == grid.modes
    bool real = false;
    bool mean_zero = false;

    SpectralField() = default;
    explicit SpectralField(const TorusGrid& g)
        : grid(g), coeffs(static_cast<std::size_t>(g.modes)) {}
    SpectralField(const TorusGrid& g, std::vector<std::complex<double>> c)
        : grid(g), coeffs(std::move(c)) {
        if (coeffs.size() != static_cast<std::size_t>(g.modes))
            throw std::invalid_argument("SpectralField: coefficient count != grid.modes");
    }

    std::complex<double>& at_k(int k) { return coeffs[static_cast<std::size_t>(grid.slot_of(k))]; }
    const std::complex<double>& at_k(int k) const {
        return coeffs[static_cast<std::size_t>(grid.slot_of(k))];
    }
};

}  // namespace gkdv
