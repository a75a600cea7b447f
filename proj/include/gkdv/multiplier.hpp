#pragma once

namespace gkdv {

// The smoothing symbol m: even, positive, m(x) = 1 for |x| <= 1 and
// m(x) = 1/|x| for |x| >= 2.  On 1 < |x| < 2 it is the fixed monotone
// quintic Hermite interpolant matching value, first and second derivative
// of the two closed forms at |x| = 1 and |x| = 2:
//   p(t) = 1 - (31/8) t^3 + (11/2) t^4 - (17/8) t^5,   t = |x| - 1.
double m_symbol(double x);
double m_symbol_derivative(double x);

// Spatial Fourier multiplier m(xi/N)^alpha: the identity on |xi| <= N,
// a smoothing of order alpha beyond.
struct MultiplierSymbol {
    double alpha = 1.0;
    double cutoff = 1.0;  // N >= 1

    MultiplierSymbol() = default;
    MultiplierSymbol(double a, double n);

    double operator()(double xi) const;
};

}  // namespace gkdv
