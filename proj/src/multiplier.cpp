#include "gkdv/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace gkdv {

double m_symbol(double x) {
    const double a = std::abs(x);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 1.0 / a;
    const double t = a - 1.0;
    const double t3 = t * t * t;
    return 1.0 + t3 * (-31.0 / 8.0 + t * (11.0 / 2.0 - t * 17.0 / 8.0));
}

double m_symbol_derivative(double x) {
    const double a = std::abs(x);
    const double sign = x < 0 ? -1.0 : 1.0;
    if (a <= 1.0) return 0.0;
    if (a >= 2.0) return -sign / (a * a);
    const double t = a - 1.0;
    return sign * t * t * (-93.0 / 8.0 + t * (22.0 - t * 85.0 / 8.0));
}

MultiplierSymbol::MultiplierSymbol(double a, double n) : alpha(a), cutoff(n) {
    if (!(n > 0.0)) throw std::invalid_argument("MultiplierSymbol: cutoff must be positive");
}

double MultiplierSymbol::operator()(double xi) const {
    if (alpha == 0.0) return 1.0;
    return std::pow(m_symbol(xi / cutoff), alpha);
}

}  // namespace gkdv
