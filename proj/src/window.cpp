#include "gkdv/window.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "gkdv/fft.hpp"
#include "gkdv/grid.hpp"

namespace gkdv {
namespace {

double psi(double y) {
    const double d = 1.0 - y * y;
    return d > 0.0 ? std::exp(-1.0 / d) : 0.0;
}

// cumulative integral of psi over [-1, 1], Hermite-interpolated
struct EtaTable {
    static constexpr int kIntervals = 8192;
    double h;
    std::vector<double> cum;    // F(y_i) = int_{-1}^{y_i} psi
    std::vector<double> deriv;  // psi(y_i)
    double total;

    EtaTable() : h(2.0 / kIntervals), cum(kIntervals + 1), deriv(kIntervals + 1) {
        // 5-point Gauss-Legendre per interval
        static const std::array<double, 5> gx = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                                 0.5384693101056831, 0.9061798459386640};
        static const std::array<double, 5> gw = {0.2369268850561891, 0.4786286704993665,
                                                 0.5688888888888889, 0.4786286704993665,
                                                 0.2369268850561891};
        cum[0] = 0.0;
        deriv[0] = psi(-1.0);
        for (int i = 0; i < kIntervals; ++i) {
            const double a = -1.0 + i * h;
            double s = 0.0;
            for (int g = 0; g < 5; ++g) s += gw[g] * psi(a + 0.5 * h * (1.0 + gx[g]));
            cum[i + 1] = cum[i] + 0.5 * h * s;
            deriv[i + 1] = psi(a + h);
        }
        total = cum[kIntervals];
    }

    double eval(double y) const {  // F(y)/F(1)
        if (y <= -1.0) return 0.0;
        if (y >= 1.0) return 1.0;
        const double u = (y + 1.0) / h;
        int i = static_cast<int>(u);
        if (i >= kIntervals) i = kIntervals - 1;
        const double t = u - i;
        const double f0 = cum[i], f1 = cum[i + 1];
        const double d0 = deriv[i] * h, d1 = deriv[i + 1] * h;
        const double t2 = t * t, t3 = t2 * t;
        const double v = (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * d0 +
                         (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * d1;
        return v / total;
    }
};

const EtaTable& eta_table() {
    static const EtaTable table;
    return table;
}

// |eta_hat| on a dense sigma grid, computed once from a long window
struct EtaSpectrum {
    double dtau;
    std::vector<double> mag;  // |eta_hat(sigma_m)|, FFT order over nt bins

    EtaSpectrum() {
        const int nt = 1 << 15;
        const double t0 = -4.0, t1 = 4.0;
        const double dt = (t1 - t0) / nt;
        dtau = 1.0 / (t1 - t0);
        std::vector<std::complex<double>> samples(nt);
        for (int n = 0; n < nt; ++n) samples[n] = bump_eta(t0 + n * dt);
        std::vector<std::complex<double>> hat(nt);
        fft::forward(samples, hat);
        mag.resize(nt);
        for (int n = 0; n < nt; ++n) mag[n] = std::abs(hat[n]) * dt;
    }

    double sigma(int m) const {
        const int nt = static_cast<int>(mag.size());
        const int k = m <= nt / 2 ? m : m - nt;
        return k * dtau;
    }
};

const EtaSpectrum& eta_spectrum() {
    static const EtaSpectrum spec;
    return spec;
}

}  // namespace

double bump_eta(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    // map |t| in [1,2] to y in [-1,1]; eta decreases from 1 to 0
    return 1.0 - eta_table().eval(2.0 * a - 3.0);
}

double bump_eta_weighted_l2(double b) {
    const auto& spec = eta_spectrum();
    double s = 0.0;
    for (std::size_t m = 0; m < spec.mag.size(); ++m) {
        const double sig = spec.sigma(static_cast<int>(m));
        s += std::pow(bracket(sig), 2.0 * b) * spec.mag[m] * spec.mag[m];
    }
    return std::sqrt(s * spec.dtau);
}

double bump_eta_hat_l1() {
    const auto& spec = eta_spectrum();
    double s = 0.0;
    for (double v : spec.mag) s += v;
    return s * spec.dtau;
}

}  // namespace gkdv
