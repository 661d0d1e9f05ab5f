#pragma once

#include <functional>

#include "measure.hpp"
#include "operators.hpp"

namespace freeineq {

/// Nonnegative scalar functional value with an explicit +infinity marker
/// (never a floating-point inf inside arithmetic).
struct FunctionalValue {
    enum class Method { spectral, quadrature };

    double value = 0.0;
    bool is_infinite = false;
    Method method = Method::spectral;

    static FunctionalValue finite(double v, Method m = Method::spectral) {
        return {v, false, m};
    }
    static FunctionalValue infinite() { return {0.0, true, Method::spectral}; }
};

/// Reduced free entropy H(mu,nu) = sum_{n>=1} gamma_n^2 / (2n) of the
/// coefficient difference.  Zero iff mu == nu.
FunctionalValue entropy_H(const BetaDensity& mu, const BetaDensity& nu);
FunctionalValue entropy_H(const SignedDifference& diff);

/// Free Fisher information I(mu,nu) = sum_{n>=1} gamma_n^2 / 2 (the squared
/// L^2(beta) distance of the densities).
FunctionalValue fisher_I(const BetaDensity& mu, const BetaDensity& nu);
FunctionalValue fisher_I(const SignedDifference& diff);

/// J(mu,nu) = int (H mu - H nu)^2 d(alpha), computed by alpha-quadrature of
/// the spectral Hilbert transforms.  Equals 2 I(mu,nu).
FunctionalValue fisher_J(const BetaDensity& mu, const BetaDensity& nu);
FunctionalValue fisher_J(const SignedDifference& diff);

/// Scaled variants for a pair pushed forward under x -> x/L so that it lives
/// on [-2/L, 2/L]: Fisher information against the arcsine law of that
/// interval (invariant under the pushforward) and the Hilbert-transform
/// energy against its semicircle law, which picks up the factor L^2:
/// J_scaled = 2 L^2 I_scaled.
FunctionalValue fisher_I_scaled(const SignedDifference& diff, double L);
FunctionalValue fisher_J_scaled(const SignedDifference& diff, double L);

/// (int |H mu - H nu|^p d(alpha))^{2/p}; reduces to J at p = 2.
FunctionalValue lp_information(const BetaDensity& mu, const BetaDensity& nu, double p);
FunctionalValue lp_information(const SignedDifference& diff, double p);

/// int |H mu - H nu|^p d(alpha) itself (no 2/p power).
double lp_integral(const SignedDifference& diff, double p);

/// Total variation distance: int |d(mu)/d(beta) - d(nu)/d(beta)| d(beta).
FunctionalValue total_variation(const BetaDensity& mu, const BetaDensity& nu);
FunctionalValue total_variation(const SignedDifference& diff);

/// H(mu,nu) for cell-based grid measures; -sum sum log|x_i - y_j| with the
/// near-diagonal cell pairs integrated analytically.  +infinity for atomic
/// inputs (the logarithmic self-energy of an atom diverges).
FunctionalValue log_energy(const GridMeasure& mu, const GridMeasure& nu);

/// Logarithmic cross energy int int log|x-y| mu(dx) nu(dy) for cell-based
/// measures (analytic near-pair integrals).  Used by the equilibrium module.
double log_cross_energy(const GridMeasure& mu, const GridMeasure& nu);

/// Exact double integral of log|x-y| over [a1,a1+h1] x [a2,a2+h2], divided by
/// h1*h2 (the cell-averaged kernel).  Valid for touching or overlapping cells.
double cell_log_kernel(double a1, double h1, double a2, double h2);

/// E_V(mu|mu_V) = int (V - U) d(mu) + H(mu, mu_V) on grid measures.
/// v_minus_u evaluates V(x) - U(x).
FunctionalValue relative_entropy_ev(const GridMeasure& mu, const GridMeasure& mu_v,
                                    const std::function<double(double)>& v_minus_u);

}  // namespace freeineq
