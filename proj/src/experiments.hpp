#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "functionals.hpp"
#include "measure.hpp"

namespace freeineq {

struct VerifyRow {
    int sample_id = 0;
    double w1 = 0.0;
    double h = 0.0;
    double i = 0.0;
    double j = 0.0;
    double slack_transport = 0.0;  // 2H - W1^2
    double slack_lsi = 0.0;        // J - 2H
    double slack_hwi = 0.0;        // sqrt(2I) W1 - W1^2/2 - H
    bool violation = false;        // any slack < -1e-9
};

struct SharpnessRow {
    double c = 0.0;  // mu - nu = c x beta(dx), i.e. gamma_1 = 2c
    double abs_slack_transport = 0.0;
    double abs_slack_lsi = 0.0;
    double abs_slack_hwi = 0.0;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<VerifyRow> rows;
    std::vector<SharpnessRow> sharpness;  // c in {0.1, 0.3, 0.5}
    int violations = 0;
};

/// Random beta-density pairs (degree <= 32): W1, H, I, J and the
/// transportation, log-Sobolev and HWI slacks; plus the equality family
/// mu - nu = c x beta(dx) where all three saturate.
VerifyReport verify_inequalities(std::uint64_t seed, int n_samples, int max_degree = 32);

/// sqrt(2I) W1 - W1^2/2 - H; the infinite marker passes through from I.
FunctionalValue hwi_slack(const BetaDensity& mu, const BetaDensity& nu);

struct PinskerRow {
    int n = 0;
    double tv = 0.0;     // 2|c|/pi for psi = c phi_n
    double h = 0.0;      // c^2/(2n)
    double ratio = 0.0;  // H/TV^2 = pi^2/(8n)
};

/// For psi = phi_n, n = 1..n_max: the ratio H/TV^2 decays like 1/n, so no
/// Pinsker-type lower bound C TV^2 <= H can hold.
std::vector<PinskerRow> pinsker_failure_table(int n_max);

struct LinearizationRow {
    double floor = 0.0;     // min of the base density
    double ratio_p = 0.0;   // W_p^2 / H at eps = 0.01 * floor
    double ratio_w1 = 0.0;  // W_1^2 / H control (stays <= 2)
};

/// Perturbation family nu_eps = (phi_delta + eps h) d(beta) with h(x) = x:
/// as the density floor delta shrinks, W_p^2/H blows up for p > 1 while the
/// p = 1 ratio stays bounded by 2.
std::vector<LinearizationRow> wp_linearization_sweep(double p,
                                                     const std::vector<double>& floor_values);

struct LpRow {
    double r = 0.0;
    std::size_t n_terms = 0;
    double tail_bound = 0.0;   // truncation error bound on H
    double h = 0.0;            // spectral entropy of the pair
    double lp_alpha = 0.0;     // int |H(mu-nu)|^p d(alpha)
    double lp_reduced = 0.0;   // (pi/8) lp_alpha / eta^p, the bare u-integral
    double ratio = 0.0;        // h / lp_alpha^{2/p}
};

/// Geometric family gamma_n = eta r^{n-1}: H, the alpha-integral of
/// |H(mu-nu)|^p (u-substitution x = 2-4u with graded panels at the r->1
/// spike), and the entropy/information ratio that diverges for p < 3/2.
std::vector<LpRow> lp_explorer(double p, const std::vector<double>& r_values, double eta);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// (int_0^pi |sum a_k sin(kt)|^p sin^{2-p}(t) dt)^{2/p} / (sum a_k^2 / k),
/// a indexed from k = 1.  Scale-invariant in a.
double trig_ratio(const std::vector<double>& a, double p);

struct FlowRow {
    double t = 0.0;
    double h = 0.0;
    double i = 0.0;
    double dh_dt = 0.0;  // centered difference; equals -2I along the flow
};

/// Entropy and Fisher information along the semigroup (modes damped by
/// e^{-nt}); checks dH/dt = -2I.
std::vector<FlowRow> semigroup_flow(const BetaDensity& mu, const BetaDensity& nu,
                                    const std::vector<double>& t_grid);

// CSV emitters (comma separator, LF endings, 17 significant digits).
void write_verify_csv(std::ostream& os, const VerifyReport& rep);
void write_lp_csv(std::ostream& os, const std::vector<LpRow>& rows, double p, double eta);

}  // namespace freeineq
