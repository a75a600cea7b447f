#pragma once

#include "gkdv/spacetime.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

enum class NormKind { Hs, Xsb, Ys, Zs, LqtLrx, Lpxt };

struct NormSpec {
    NormKind kind = NormKind::Hs;
    double s = 0.0;
    double b = 0.0;
    double p = 2.0, q = 2.0, r = 2.0;  // infinity spelled as std::numeric_limits<double>::infinity()

    static NormSpec hs(double s) { return {NormKind::Hs, s, 0, 2, 2, 2}; }
    static NormSpec xsb(double s, double b) { return {NormKind::Xsb, s, b, 2, 2, 2}; }
    static NormSpec ys(double s) { return {NormKind::Ys, s, 0, 2, 2, 2}; }
    static NormSpec zs(double s) { return {NormKind::Zs, s, 0, 2, 2, 2}; }
    static NormSpec lqt_lrx(double q, double r) { return {NormKind::LqtLrx, 0, 0, 2, q, r}; }
    static NormSpec lp_xt(double p) { return {NormKind::Lpxt, 0, 0, p, 2, 2}; }
};

// H^s of a single slice: sqrt((1/lambda) sum <xi>^{2s} |u_hat|^2).
double norm(const SpectralField& field, const NormSpec& spec);

// Space-time norms; weighted-l2 kinds go through the modulation spectrum,
// Lebesgue kinds through oversampled physical samples (factor 2 by default).
double norm(const SpaceTimeField& u, const NormSpec& spec, int oversample = 2);
double norm(const SpaceTimeSpectrum& spec_data, const NormSpec& spec);

// int int chi_[0,1](t) u v dx dt, spectral in x, trapezoid in t.
double duality_pairing(const SpaceTimeField& u, const SpaceTimeField& v);

}  // namespace gkdv
