#pragma once

#include <functional>
#include <string>
#include <vector>

#include "functionals.hpp"
#include "measure.hpp"

namespace freeineq {

/// External potential with a quadratic growth certificate:
/// V(x)/x^2 >= A/2 for |x| > B (checked on sample points at construction).
struct Potential {
    std::function<double(double)> eval;
    double A = 0.0;
    double B = 0.0;
    double lower_bound = 0.0;

    /// Polynomial sum c_k x^k; requires even degree >= 2 with positive
    /// leading coefficient (otherwise the energy has no minimizer).
    static Potential polynomial(const std::vector<double>& coeffs);

    /// min((x-a1)^2/2, (x-a2)^2/2): quadratic wells at a1 < a2.
    static Potential double_well(double a1, double a2);
};

struct EquilibriumResult {
    GridMeasure measure;
    double robin_constant = 0.0;  // K_V
    double support_lo = 0.0;
    double support_hi = 0.0;
    double residual = 0.0;  // max Euler-Lagrange violation at the solution
    int iterations = 0;

    /// U(x) = 2 int log|x-y| measure(dy) + K_V, cell-averaged near x.
    double effective_potential(double x) const;
};

/// Minimize E_V(w) = sum V(x_i) w_i - sum sum K_ij w_i w_j over the simplex
/// on uniform cells of [a,b], projected gradient (Barzilai-Borwein step,
/// Armijo backtracking).  Convex, so stationarity certifies the minimum.
/// Throws std::runtime_error with the residual on non-convergence.
EquilibriumResult solve_equilibrium(const Potential& v, double a, double b, int n_cells);

/// Default interval [-2B-4, 2B+4] from the growth certificate.
EquilibriumResult solve_equilibrium(const Potential& v, int n_cells);

/// max over on-support cells (weight > 1e-8) of |V - U| plus max over
/// off-support cells of max(0, U - V).
double euler_lagrange_residual(const EquilibriumResult& eq, const Potential& v);

/// Discretized energy E_V(mu) = int V d(mu) - int int log|x-y| d(mu) d(mu)
/// with analytic cell-pair log integrals.
double energy_ev(const GridMeasure& mu, const Potential& v);

/// Odd increasing C^1 map fixing [-L,L] and blowing up at +-sqrt(3) L:
/// phi(x) = x on [-L,L], 2L^3/(3L^2 - x^2) for L < x < sqrt(3) L.
struct CompressionMap {
    double L;

    explicit CompressionMap(double L);
    double operator()(double x) const;
    double derivative(double x) const;
};

CompressionMap compression_map(double L);

struct TransportCheckEntry {
    std::string label;
    double w1 = 0.0;
    double rel_entropy = 0.0;  // E_V(mu | mu_V)
    double ratio = 0.0;        // rel_entropy / w1^2
    bool skipped = false;
    std::string note;
};

struct TransportCheckReport {
    std::vector<TransportCheckEntry> entries;
    double min_ratio = 0.0;
    double constant = 0.0;  // 2A / (12 A L^2 + 9)
    double A = 0.0;
    double L = 0.0;
    std::vector<std::pair<double, double>> l_sensitivity;  // (L, constant)
    bool passed = false;
};

/// Verifies E_V(mu|mu_V) >= c W_1(mu,mu_V)^2 with the explicit constant
/// c = 2A/(12AL^2+9), L the smallest value >= max(B, 2*support radius,
/// 3^{1/4}) keeping supp(mu_V) inside [-L/2, L/2].
/// Canonical test measures around an equilibrium result: translates,
/// a dilation, an on-grid mixture, and spectral-class measures mapped onto
/// the solver interval, plus one atomic entry (exercises the skip path).
std::vector<std::pair<std::string, GridMeasure>> standard_test_family(
    const EquilibriumResult& eq);

TransportCheckReport global_transport_check(
    const Potential& v, const EquilibriumResult& eq,
    const std::vector<std::pair<std::string, GridMeasure>>& test_measures);

struct DoubleWellReport {
    double a1 = 0.0;
    double a2 = 0.0;
    double h_residual_1 = 0.0;  // sup |H(mu_1) - V'| on the first well
    double h_residual_2 = 0.0;
    double fisher_mu1 = 0.0;  // int (H mu_i - V')^2 d(mu_i)
    double fisher_mu2 = 0.0;
    double w1_between = 0.0;
};

/// Two translated semicircles in the wells of min((x-a1)^2/2,(x-a2)^2/2):
/// both have vanishing relative Fisher information yet are far apart in W_1,
/// so no log-Sobolev inequality can hold for this potential.
DoubleWellReport double_well_demo(double a1 = -3.0, double a2 = 3.0);

}  // namespace freeineq
