#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gkdv/grid.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

// Uniform time samples t_n = t0 + n*dt, n = 0..samples-1 (right endpoint
// excluded, so the induced modulation grid has spacing 1/span).
struct TimeGrid {
    double t0 = 0.0;
    int samples = 0;
    double dt = 0.0;

    static TimeGrid over(double t0, double t1, int samples);
    double t(int n) const { return t0 + n * dt; }
    double span() const { return samples * dt; }
    // index of a time value that must land on a sample (throws otherwise)
    int index_of(double t, const char* what) const;
    bool operator==(const TimeGrid& o) const {
        return t0 == o.t0 && samples == o.samples && dt == o.dt;
    }
};

enum class Window { none, bump };

// Field on a time window, one spectral slice per sample.  Layout is
// time-major: value(n, j) = u_hat(xi_j, t_n).
struct SpaceTimeField {
    TorusGrid grid;
    TimeGrid tgrid;
    Window window = Window::none;
    std::vector<std::complex<double>> data;

    SpaceTimeField() = default;
    SpaceTimeField(const TorusGrid& g, const TimeGrid& tg, Window w = Window::none);

    std::complex<double>& at(int n, int j) { return data[std::size_t(n) * grid.modes + j]; }
    const std::complex<double>& at(int n, int j) const {
        return data[std::size_t(n) * grid.modes + j];
    }
    std::span<const std::complex<double>> slice_span(int n) const {
        return {data.data() + std::size_t(n) * grid.modes, std::size_t(grid.modes)};
    }
    std::span<std::complex<double>> slice_span(int n) {
        return {data.data() + std::size_t(n) * grid.modes, std::size_t(grid.modes)};
    }
    SpectralField slice(int n) const;
    void set_slice(int n, const SpectralField& f);
};

// eta(t) S(t) u0 on the window (windowed: multiplied by the bump cutoff).
SpaceTimeField airy_flow(const SpectralField& u0, const TimeGrid& tgrid, bool windowed = true);

// Multiply every slice by eta(t); marks the field as bump-windowed.
SpaceTimeField apply_bump_window(const SpaceTimeField& u);

// Slice-wise dealiased pointwise product of n fields on a shared grid.
SpaceTimeField product(std::span<const SpaceTimeField* const> factors);
SpaceTimeField product(const SpaceTimeField& a, const SpaceTimeField& b);
SpaceTimeField product(const SpaceTimeField& a, const SpaceTimeField& b, const SpaceTimeField& c);

SpaceTimeField derivative_x(const SpaceTimeField& u);
SpaceTimeField project_mean_zero(const SpaceTimeField& u);

SpaceTimeField operator-(const SpaceTimeField& a, const SpaceTimeField& b);
SpaceTimeField operator+(const SpaceTimeField& a, const SpaceTimeField& b);
SpaceTimeField operator*(double c, const SpaceTimeField& a);
SpaceTimeField operator*(std::complex<double> c, const SpaceTimeField& a);

// Windowed space-time transform, stored against the modulation variable:
// value(j, m) = u_hat(xi_j, tau) at tau = xi_j^3 + sigma_m, where sigma_m
// runs over the shared modulation grid of spacing 1/window-span (FFT order).
// Keeping the tau grid anchored to the dispersion surface per mode is what
// makes the <tau - xi^3> weights meaningful on a finite window.
struct SpaceTimeSpectrum {
    TorusGrid grid;
    TimeGrid tgrid;   // originating window
    double dtau = 0;  // 1/span
    std::vector<std::complex<double>> data;  // mode-major: [j * samples + m]

    std::complex<double>& at(int j, int m) { return data[std::size_t(j) * tgrid.samples + m]; }
    const std::complex<double>& at(int j, int m) const {
        return data[std::size_t(j) * tgrid.samples + m];
    }
    double sigma(int m) const {
        const int k = m <= tgrid.samples / 2 ? m : m - tgrid.samples;
        return k * dtau;
    }
    // modulation slot for a target sigma, or -1 when off the grid
    int slot_for_sigma(double target) const;
};

SpaceTimeSpectrum spacetime_transform(const SpaceTimeField& u);

// Synthesize a field from per-mode modulation data (inverse of the above).
SpaceTimeField spacetime_synthesize(const SpaceTimeSpectrum& spec);

// Physical samples of one time slice on an os-times oversampled x grid.
std::vector<std::complex<double>> slice_physical(const SpaceTimeField& u, int n, int factor);

}  // namespace gkdv
