#include "gkdv/spacetime.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkdv/fft.hpp"
#include "gkdv/window.hpp"

namespace gkdv {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TimeGrid TimeGrid::over(double t0, double t1, int samples) {
    if (samples < 2) throw std::invalid_argument("TimeGrid: need at least 2 samples");
    if (!(t1 > t0)) throw std::invalid_argument("TimeGrid: empty window");
    return TimeGrid{t0, samples, (t1 - t0) / samples};
}

int TimeGrid::index_of(double tv, const char* what) const {
    const double u = (tv - t0) / dt;
    const int n = static_cast<int>(std::lround(u));
    if (n < 0 || n >= samples || std::abs(u - n) > 1e-9)
        throw std::invalid_argument(std::string(what) + ": time not on the sample grid");
    return n;
}

SpaceTimeField::SpaceTimeField(const TorusGrid& g, const TimeGrid& tg, Window w)
    : grid(g), tgrid(tg), window(w),
      data(std::size_t(tg.samples) * g.modes) {}

SpectralField SpaceTimeField::slice(int n) const {
    SpectralField f(grid);
    const auto s = slice_span(n);
    f.coeffs.assign(s.begin(), s.end());
    return f;
}

void SpaceTimeField::set_slice(int n, const SpectralField& f) {
    if (f.grid != grid) throw std::invalid_argument("set_slice: grid mismatch");
    auto s = slice_span(n);
    std::copy(f.coeffs.begin(), f.coeffs.end(), s.begin());
}

SpaceTimeField airy_flow(const SpectralField& u0, const TimeGrid& tgrid, bool windowed) {
    SpaceTimeField out(u0.grid, tgrid, windowed ? Window::bump : Window::none);
    for (int n = 0; n < tgrid.samples; ++n) {
        const double t = tgrid.t(n);
        const double eta = windowed ? bump_eta(t) : 1.0;
        auto s = out.slice_span(n);
        for (int j = 0; j < u0.grid.modes; ++j)
            s[j] = eta * u0.coeffs[j] * airy_phase(u0.grid.frequency(j), t);
    }
    return out;
}

SpaceTimeField apply_bump_window(const SpaceTimeField& u) {
    SpaceTimeField out = u;
    out.window = Window::bump;
    for (int n = 0; n < u.tgrid.samples; ++n) {
        const double eta = bump_eta(u.tgrid.t(n));
        for (auto& v : out.slice_span(n)) v *= eta;
    }
    return out;
}

std::vector<std::complex<double>> slice_physical(const SpaceTimeField& u, int n, int factor) {
    return grid_samples(u.slice(n), factor * u.grid.modes);
}

SpaceTimeField product(std::span<const SpaceTimeField* const> factors) {
    if (factors.empty()) throw std::invalid_argument("product: no factors");
    const auto& first = *factors[0];
    for (const auto* f : factors)
        if (f->grid != first.grid || !(f->tgrid == first.tgrid))
            throw std::invalid_argument("product: grid/window mismatch");
    const int m = first.grid.modes;
    const int d = static_cast<int>(factors.size());
    // exact dealiasing for a degree-d pointwise product
    int os = ((d + 1) * m + 1) / 2;
    if (os % 2) ++os;
    SpaceTimeField out(first.grid, first.tgrid, first.window);
    std::vector<std::complex<double>> acc, work;
    for (int n = 0; n < first.tgrid.samples; ++n) {
        acc = grid_samples(first.slice(n), os);
        for (int f = 1; f < d; ++f) {
            work = grid_samples(factors[f]->slice(n), os);
            for (int i = 0; i < os; ++i) acc[i] *= work[i];
        }
        out.set_slice(n, analyze_truncating(first.grid, acc));
    }
    return out;
}

SpaceTimeField product(const SpaceTimeField& a, const SpaceTimeField& b) {
    const SpaceTimeField* fs[] = {&a, &b};
    return product(std::span<const SpaceTimeField* const>(fs, 2));
}

SpaceTimeField product(const SpaceTimeField& a, const SpaceTimeField& b,
                       const SpaceTimeField& c) {
    const SpaceTimeField* fs[] = {&a, &b, &c};
    return product(std::span<const SpaceTimeField* const>(fs, 3));
}

SpaceTimeField derivative_x(const SpaceTimeField& u) {
    SpaceTimeField out = u;
    for (int n = 0; n < u.tgrid.samples; ++n) {
        auto s = out.slice_span(n);
        for (int j = 0; j < u.grid.modes; ++j)
            s[j] *= std::complex<double>(0.0, two_pi * u.grid.frequency(j));
    }
    return out;
}

SpaceTimeField project_mean_zero(const SpaceTimeField& u) {
    SpaceTimeField out = u;
    for (int n = 0; n < u.tgrid.samples; ++n) out.at(n, 0) = 0.0;
    return out;
}

SpaceTimeField operator-(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid != b.grid || !(a.tgrid == b.tgrid))
        throw std::invalid_argument("field -: shape mismatch");
    SpaceTimeField out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
    return out;
}

SpaceTimeField operator+(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid != b.grid || !(a.tgrid == b.tgrid))
        throw std::invalid_argument("field +: shape mismatch");
    SpaceTimeField out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

SpaceTimeField operator*(double c, const SpaceTimeField& a) {
    SpaceTimeField out = a;
    for (auto& v : out.data) v *= c;
    return out;
}

SpaceTimeField operator*(std::complex<double> c, const SpaceTimeField& a) {
    SpaceTimeField out = a;
    for (auto& v : out.data) v *= c;
    return out;
}

int SpaceTimeSpectrum::slot_for_sigma(double target) const {
    const double u = target / dtau;
    const long long k = std::llround(u);
    if (std::abs(u - k) > 1e-6) return -1;
    const int nt = tgrid.samples;
    if (k > nt / 2 || k <= -nt / 2) return -1;
    return static_cast<int>(k >= 0 ? k : k + nt);
}

SpaceTimeSpectrum spacetime_transform(const SpaceTimeField& u) {
    const int nt = u.tgrid.samples;
    const int m = u.grid.modes;
    SpaceTimeSpectrum spec;
    spec.grid = u.grid;
    spec.tgrid = u.tgrid;
    spec.dtau = 1.0 / u.tgrid.span();
    spec.data.resize(std::size_t(m) * nt);

    std::vector<std::complex<double>> series(nt), hat(nt);
    for (int j = 0; j < m; ++j) {
        const double xi = u.grid.frequency(j);
        // demodulate by the free phase so the DFT variable is tau - xi^3
        for (int n = 0; n < nt; ++n)
            series[n] = u.at(n, j) * std::conj(airy_phase(xi, u.tgrid.t(n)));
        fft::forward(series, hat);
        for (int mm = 0; mm < nt; ++mm) {
            // e^{-2 pi i sigma_m t} = e^{-2 pi i sigma_m t0} e^{-2 pi i m n / nt}
            const double sig = spec.sigma(mm);
            const std::complex<double> shift = std::polar(1.0, -two_pi * sig * u.tgrid.t0);
            spec.at(j, mm) = hat[mm] * shift * u.tgrid.dt;
        }
    }
    return spec;
}

SpaceTimeField spacetime_synthesize(const SpaceTimeSpectrum& spec) {
    const int nt = spec.tgrid.samples;
    const int m = spec.grid.modes;
    SpaceTimeField out(spec.grid, spec.tgrid, Window::bump);
    std::vector<std::complex<double>> hat(nt), series(nt);
    for (int j = 0; j < m; ++j) {
        const double xi = spec.grid.frequency(j);
        for (int mm = 0; mm < nt; ++mm) {
            const double sig = spec.sigma(mm);
            hat[mm] = spec.at(j, mm) * std::polar(1.0, two_pi * sig * spec.tgrid.t0);
        }
        fft::inverse(hat, series);
        const double scale = spec.dtau;
        for (int n = 0; n < nt; ++n)
            out.at(n, j) = series[n] * scale * airy_phase(xi, spec.tgrid.t(n));
    }
    return out;
}

}  // namespace gkdv
