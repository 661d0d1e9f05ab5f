#pragma once

#include "cheb.hpp"
#include "measure.hpp"

namespace freeineq {

// Diagonal/shift actions on Chebyshev coefficients:
//   E phi_0 = 0,  E phi_n = phi_n / n
//   N phi_n = n phi_n
//   L = N^2,      L phi = -(4-x^2) phi'' + x phi' on polynomials
//   U phi_n = psi_{n-1} / 2, U kills constants
//   P_t phi_n = e^{-tn} phi_n  (semigroup of N)

ChebSeries apply_E(const ChebSeries& f);
ChebSeries apply_N(const ChebSeries& f);
ChebSeries apply_L(const ChebSeries& f);
SecondKindSeries apply_U(const ChebSeries& f);

/// Semigroup P_t; requires t >= 0.
ChebSeries semigroup(const ChebSeries& f, double t);

/// Principal-value Hilbert transform of phi d(beta), spectral form.
///
/// The Glauert integral gives p.v. int phi_n(y)/(x-y) beta(dy) = -psi_{n-1}(x)/2,
/// so H(phi d(beta)) = -sum_n gamma_n psi_{n-1} = -2 U(phi).  (Some sources print
/// the opposite sign; this convention reproduces H(alpha)(x) = x, the quadratic
/// equilibrium condition V' = H mu_V.)
SecondKindSeries hilbert(const ChebSeries& density);
SecondKindSeries hilbert(const BetaDensity& mu);
SecondKindSeries hilbert(const SignedDifference& diff);

}  // namespace freeineq
