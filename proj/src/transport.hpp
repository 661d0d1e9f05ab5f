#pragma once

#include <functional>

#include "measure.hpp"

namespace freeineq {

/// p-Wasserstein distance, p >= 1.  Beta-density pairs use the closed-form
/// CDF: the quantile-coupling integral for general p, the x-space formula
/// int |F_mu - F_nu| dx at p = 1.
double wasserstein_p(const BetaDensity& mu, const BetaDensity& nu, double p);

/// Same quantile integral for measures pushed forward under x -> L x; the
/// two half-widths must agree.
double wasserstein_p(const ScaledMeasure& mu, const ScaledMeasure& nu, double p);

/// Quantile-coupling integral for any p >= 1, including p = 1 (used as an
/// independent cross-check of the x-space route).
double wasserstein_quantile(const BetaDensity& mu, const BetaDensity& nu, double p);

/// Exact sorted-mass coupling for discrete measures.
double wasserstein_p(const GridMeasure& mu, const GridMeasure& nu, double p);

/// Dual representation of W1: 2 int |(E^2 psi)'| d(alpha)
/// = int |sum_{n>=1} (gamma_n/n) psi_{n-1}| d(alpha).
double w1_dual_spectral(const SignedDifference& diff);

/// 2 <E^2 psi, psi>_beta = sum gamma_n^2 / n^2.  Upper bound for W1^2 by
/// Cauchy-Schwarz; equality iff psi is proportional to phi_1.
double w1_sq_spectral_upper(const SignedDifference& diff);

/// Unique nondecreasing map theta with theta_# nu = mu:
/// theta = F_mu^{-1} o F_nu.  Requires atomless nu (beta-density class).
std::function<double(double)> monotone_map(const BetaDensity& mu, const BetaDensity& nu);

}  // namespace freeineq
