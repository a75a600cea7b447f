#include "gkdv/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gkdv {

namespace {

bool is_inf(double p) { return std::isinf(p); }

double xsb_norm(const SpaceTimeSpectrum& sp, double s, double b) {
    double acc = 0.0;
    for (int j = 0; j < sp.grid.modes; ++j) {
        const double wxi = std::pow(bracket(sp.grid.frequency(j)), 2.0 * s);
        double inner = 0.0;
        for (int m = 0; m < sp.tgrid.samples; ++m)
            inner += std::pow(bracket(sp.sigma(m)), 2.0 * b) * std::norm(sp.at(j, m));
        acc += wxi * inner;
    }
    return std::sqrt(acc * sp.dtau / sp.grid.period);
}

// || <xi>^s u_hat * w(sigma) ||_{L^2_xi L^1_tau} with w = 1 or 1/<sigma>
double l2l1_norm(const SpaceTimeSpectrum& sp, double s, bool modulation_inverse) {
    double acc = 0.0;
    for (int j = 0; j < sp.grid.modes; ++j) {
        double inner = 0.0;
        for (int m = 0; m < sp.tgrid.samples; ++m) {
            double v = std::abs(sp.at(j, m));
            if (modulation_inverse) v /= bracket(sp.sigma(m));
            inner += v;
        }
        inner *= sp.dtau;
        const double wxi = std::pow(bracket(sp.grid.frequency(j)), s);
        acc += wxi * wxi * inner * inner;
    }
    return std::sqrt(acc / sp.grid.period);
}

double lebesgue_x(std::span<const std::complex<double>> samples, double r, double dx) {
    if (is_inf(r)) {
        double m = 0.0;
        for (const auto& v : samples) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (const auto& v : samples) s += std::pow(std::abs(v), r);
    return std::pow(s * dx, 1.0 / r);
}

}  // namespace

double norm(const SpectralField& field, const NormSpec& spec) {
    if (spec.kind != NormKind::Hs)
        throw std::invalid_argument("norm: a SpectralField only carries H^s norms");
    double acc = 0.0;
    for (int j = 0; j < field.grid.modes; ++j)
        acc += std::pow(bracket(field.grid.frequency(j)), 2.0 * spec.s) *
               std::norm(field.coeffs[j]);
    return std::sqrt(acc / field.grid.period);
}

double norm(const SpaceTimeSpectrum& sp, const NormSpec& spec) {
    switch (spec.kind) {
        case NormKind::Xsb:
            return xsb_norm(sp, spec.s, spec.b);
        case NormKind::Ys:
            return xsb_norm(sp, spec.s, 0.5) + l2l1_norm(sp, spec.s, false);
        case NormKind::Zs:
            return xsb_norm(sp, spec.s, -0.5) + l2l1_norm(sp, spec.s, true);
        default:
            throw std::invalid_argument("norm: spectrum carries only X/Y/Z kinds");
    }
}

double norm(const SpaceTimeField& u, const NormSpec& spec, int oversample) {
    switch (spec.kind) {
        case NormKind::Hs:
            throw std::invalid_argument("norm: H^s applies to a single slice");
        case NormKind::Xsb:
        case NormKind::Ys:
        case NormKind::Zs:
            return norm(spacetime_transform(u), spec);
        case NormKind::LqtLrx: {
            const double dx = u.grid.period / (oversample * u.grid.modes);
            if (is_inf(spec.q)) {
                double m = 0.0;
                for (int n = 0; n < u.tgrid.samples; ++n)
                    m = std::max(m, lebesgue_x(slice_physical(u, n, oversample), spec.r, dx));
                return m;
            }
            double acc = 0.0;
            for (int n = 0; n < u.tgrid.samples; ++n)
                acc += std::pow(lebesgue_x(slice_physical(u, n, oversample), spec.r, dx), spec.q);
            return std::pow(acc * u.tgrid.dt, 1.0 / spec.q);
        }
        case NormKind::Lpxt: {
            const double dx = u.grid.period / (oversample * u.grid.modes);
            if (is_inf(spec.p)) {
                double m = 0.0;
                for (int n = 0; n < u.tgrid.samples; ++n) {
                    for (const auto& v : slice_physical(u, n, oversample))
                        m = std::max(m, std::abs(v));
                }
                return m;
            }
            double acc = 0.0;
            for (int n = 0; n < u.tgrid.samples; ++n) {
                for (const auto& v : slice_physical(u, n, oversample))
                    acc += std::pow(std::abs(v), spec.p);
            }
            return std::pow(acc * dx * u.tgrid.dt, 1.0 / spec.p);
        }
    }
    throw std::logic_error("norm: unreachable");
}

double duality_pairing(const SpaceTimeField& u, const SpaceTimeField& v) {
    if (u.grid != v.grid || !(u.tgrid == v.tgrid))
        throw std::invalid_argument("duality_pairing: grid mismatch");
    const int n0 = u.tgrid.index_of(0.0, "duality_pairing");
    const int n1 = u.tgrid.index_of(1.0, "duality_pairing");
    const int m = u.grid.modes;
    double acc = 0.0;
    for (int n = n0; n <= n1; ++n) {
        // int u v dx = (1/lambda) sum_k u_hat(k) v_hat(-k)
        std::complex<double> s = 0.0;
        const auto us = u.slice_span(n);
        const auto vs = v.slice_span(n);
        for (int j = 0; j < m; ++j) s += us[j] * vs[(m - j) % m];
        const double w = (n == n0 || n == n1) ? 0.5 : 1.0;
        acc += w * s.real() / u.grid.period;
    }
    return acc * u.tgrid.dt;
}

}  // namespace gkdv
