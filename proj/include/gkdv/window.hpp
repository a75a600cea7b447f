#pragma once

namespace gkdv {

// Smooth time cutoff eta: 1 on [-1,1], 0 outside [-2,2], tapered on
// 1 < |t| < 2 by the normalized integral of the standard exp(-1/(1-x^2))
// bump.  The taper is tabulated once per process (dense Hermite table) so
// every evaluation is reproducible across runs.
double bump_eta(double t);

// \int <sigma>^{2b} |eta_hat(sigma)|^2 dsigma and \int |eta_hat| dsigma,
// computed once from the same table; used as reference constants in tests.
double bump_eta_weighted_l2(double b);
double bump_eta_hat_l1();

}  // namespace gkdv
