#include "gkdv/spectral.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gkdv/fft.hpp"

namespace gkdv {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

std::vector<std::complex<double>> synthesize(const SpectralField& field,
                                             std::span<const double> points) {
    const auto& g = field.grid;
    std::vector<std::complex<double>> out(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < g.modes; ++j) {
            if (field.coeffs[j] == std::complex<double>(0.0)) continue;
            const double phase = two_pi * g.frequency(j) * points[p];
            acc += field.coeffs[j] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        out[p] = acc / g.period;
    }
    return out;
}

std::vector<std::complex<double>> grid_samples(const SpectralField& field, int n) {
    const int m = field.grid.modes;
    if (n == 0) n = m;
    if (n < m) throw std::invalid_argument("grid_samples: n must be >= modes");
    std::vector<std::complex<double>> padded(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j) {
        const int k = field.grid.k_of(j);
        padded[static_cast<std::size_t>(k >= 0 ? k : k + n)] = field.coeffs[j];
    }
    std::vector<std::complex<double>> out(padded.size());
    fft::inverse(padded, out);
    const double scale = 1.0 / field.grid.period;
    for (auto& v : out) v *= scale;
    return out;
}

SpectralField analyze(const TorusGrid& grid, std::span<const std::complex<double>> samples) {
    if (samples.size() != static_cast<std::size_t>(grid.modes))
        throw std::invalid_argument("analyze: sample count != grid.modes");
    SpectralField f(grid);
    fft::forward(samples, f.coeffs);
    const double scale = grid.period / grid.modes;
    for (auto& c : f.coeffs) c *= scale;
    f.real = is_conjugate_symmetric(f);
    f.mean_zero = std::abs(f.coeffs[0]) == 0.0;
    return f;
}

SpectralField analyze_truncating(const TorusGrid& grid,
                                 std::span<const std::complex<double>> samples) {
    const int n = static_cast<int>(samples.size());
    if (n < grid.modes) throw std::invalid_argument("analyze_truncating: fewer samples than modes");
    std::vector<std::complex<double>> hat(samples.size());
    fft::forward(samples, hat);
    const double scale = grid.period / n;
    SpectralField f(grid);
    for (int j = 0; j < grid.modes; ++j) {
        const int k = grid.k_of(j);
        f.coeffs[j] = hat[static_cast<std::size_t>(k >= 0 ? k : k + n)] * scale;
    }
    f.coeffs[grid.nyquist_slot()] = 0.0;
    return f;
}

SpectralField project_mean_zero(const SpectralField& field) {
    SpectralField out = field;
    out.coeffs[0] = 0.0;
    out.mean_zero = true;
    return out;
}

std::complex<double> airy_phase(double xi, double t) {
    // cycle count xi^3 t reduced mod 1 before the trig call
    const double cycles = std::fmod(xi * xi * xi * t, 1.0);
    return std::polar(1.0, two_pi * cycles);
}

SpectralField airy_propagate(const SpectralField& field, double t) {
    SpectralField out = field;
    for (int j = 0; j < field.grid.modes; ++j)
        out.coeffs[j] *= airy_phase(field.grid.frequency(j), t);
    return out;
}

SpectralField apply_I(const SpectralField& field, const MultiplierSymbol& sym) {
    SpectralField out = field;
    for (int j = 0; j < field.grid.modes; ++j)
        out.coeffs[j] *= sym(field.grid.frequency(j));
    return out;
}

SpectralField rescale_field(const SpectralField& field, double lambda, int modes_out) {
    if (field.grid.period != 1.0)
        throw std::invalid_argument("rescale_field: input must live on the unit torus");
    if (lambda < 1.0) throw std::invalid_argument("rescale_field: lambda must be >= 1");
    if (modes_out == 0) modes_out = field.grid.modes;
    if (modes_out < field.grid.modes)
        throw std::invalid_argument("rescale_field: modes_out cannot drop modes");
    SpectralField out{TorusGrid(lambda, modes_out)};
    const double amp = std::cbrt(lambda);  // lambda^{1/3}
    for (int j = 0; j < field.grid.modes; ++j)
        out.at_k(field.grid.k_of(j)) = amp * field.coeffs[j];
    out.real = field.real;
    out.mean_zero = field.mean_zero;
    return out;
}

SpectralField rescale_inverse(const SpectralField& field, int modes_out) {
    const double lambda = field.grid.period;
    if (modes_out == 0) modes_out = field.grid.modes;
    SpectralField out{TorusGrid(1.0, modes_out)};
    const double amp = 1.0 / std::cbrt(lambda);
    for (int j = 0; j < field.grid.modes; ++j) {
        const int k = field.grid.k_of(j);
        if (out.grid.holds_k(k)) out.at_k(k) = amp * field.coeffs[j];
    }
    out.real = field.real;
    out.mean_zero = field.mean_zero;
    return out;
}

SpectralField random_field(const TorusGrid& grid, double decay, std::uint64_t seed) {
    if (decay < 0.0) throw std::invalid_argument("random_field: decay must be >= 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField f(grid);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 1; k < grid.modes / 2; ++k) {
        const double sigma = std::pow(bracket(k / grid.period), -decay);
        const std::complex<double> c(gauss(rng) * sigma * inv_sqrt2,
                                     gauss(rng) * sigma * inv_sqrt2);
        f.at_k(k) = c;
        f.at_k(-k) = std::conj(c);
    }
    f.real = true;
    f.mean_zero = true;
    return f;
}

double l2_norm(const SpectralField& field) {
    double s = 0.0;
    for (const auto& c : field.coeffs) s += std::norm(c);
    return std::sqrt(s / field.grid.period);
}

double mean_value(const SpectralField& field) {
    return field.coeffs[0].real() / field.grid.period;
}

double max_coefficient(const SpectralField& field) {
    double m = 0.0;
    for (const auto& c : field.coeffs) m = std::max(m, std::abs(c));
    return m;
}

bool is_conjugate_symmetric(const SpectralField& field, double tol) {
    const double scale = std::max(max_coefficient(field), 1e-300);
    if (std::abs(field.coeffs[0].imag()) > tol * scale) return false;
    const int m = field.grid.modes;
    if (std::abs(field.coeffs[m / 2].imag()) > tol * scale) return false;
    for (int k = 1; k < m / 2; ++k)
        if (std::abs(field.at_k(k) - std::conj(field.at_k(-k))) > tol * scale) return false;
    return true;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    if (a.grid != b.grid) throw std::invalid_argument("field +: grid mismatch");
    SpectralField out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    if (a.grid != b.grid) throw std::invalid_argument("field -: grid mismatch");
    SpectralField out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

SpectralField operator*(double c, const SpectralField& a) {
    SpectralField out = a;
    for (auto& v : out.coeffs) v *= c;
    return out;
}

}  // namespace gkdv
