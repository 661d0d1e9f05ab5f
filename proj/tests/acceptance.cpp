// Acceptance gate: one [PASS]/[FAIL] line per criterion.  An optional
// argument selects a single criterion by number.  Exit code = number of
// failed criteria among those run.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "equilibrium.hpp"
#include "experiments.hpp"
#include "functionals.hpp"
#include "operators.hpp"
#include "quadrature.hpp"
#include "transport.hpp"

using namespace freeineq;

namespace {

constexpr double kPi = std::numbers::pi;

ChebSeries mode(int n, double c = 1.0) {
    std::vector<double> g(n + 1, 0.0);
    g[n] = c;
    return ChebSeries(std::move(g));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

bool check(bool cond, const char* what, std::ostringstream& detail) {
    if (!cond) detail << " [failed: " << what << "]";
    return cond;
}

// ---- criterion 1: operator suite -------------------------------------------
bool criterion1(std::ostringstream& detail) {
    Timer timer;
    bool ok = true;
    for (int n = 1; n <= 64; ++n) {
        ok &= std::abs(apply_E(mode(n)).coeffs[n] - 1.0 / n) < 1e-12;
        ok &= std::abs(apply_N(mode(n)).coeffs[n] - n) < 1e-12;
        ok &= std::abs(apply_L(mode(n)).coeffs[n] - double(n) * n) < 1e-12;
        ok &= std::abs(apply_U(mode(n)).coeffs[n - 1] - 0.5) < 1e-12;
    }
    ok = check(ok, "mode actions to 1e-12 for n <= 64", detail);

    Rng rng(101);
    const QuadratureRule ra = QuadratureRule::alpha(256);
    const QuadratureRule rb = QuadratureRule::beta(256);
    bool identities = true;
    for (int trial = 0; trial < 50; ++trial) {
        int deg = 2 + int(rng.uniform() * 12);
        std::vector<double> a(deg + 1), b(deg + 1);
        for (auto& c : a) c = rng.uniform(-1.0, 1.0);
        for (auto& c : b) c = rng.uniform(-1.0, 1.0);
        ChebSeries f(a), g(b);
        ChebSeries lf = apply_L(f);
        double lhs = 0.0;
        for (std::size_t k = 0; k < rb.size(); ++k)
            lhs += rb.weights[k] * lf.eval(rb.nodes[k]) * g.eval(rb.nodes[k]);
        SecondKindSeries df = derivative(f), dg = derivative(g);
        double rhs = 0.0, unorm = 0.0;
        for (std::size_t k = 0; k < ra.size(); ++k) {
            rhs += 2.0 * ra.weights[k] * df.eval(ra.nodes[k]) * dg.eval(ra.nodes[k]);
            double u = apply_U(f).eval(ra.nodes[k]);
            unorm += ra.weights[k] * u * u;
        }
        double var = 0.0;
        for (std::size_t n = 1; n < f.coeffs.size(); ++n) var += 0.5 * f.coeffs[n] * f.coeffs[n];
        identities &= std::abs(lhs - rhs) < 1e-10;
        identities &= std::abs(unorm - 0.5 * var) < 1e-10;
    }
    ok &= check(identities, "bilinear identities on 50 random pairs to 1e-10", detail);
    ok &= check(timer.seconds() < 5.0, "runtime < 5 s", detail);
    return ok;
}

// shared sweep for criteria 2-4
const VerifyReport& sweep1000() {
    static const VerifyReport rep = verify_inequalities(42, 1000);
    return rep;
}

// ---- criterion 2: transportation -------------------------------------------
bool criterion2(std::ostringstream& detail) {
    Timer timer;
    const VerifyReport& rep = sweep1000();
    bool ok = true;
    int bad = 0;
    for (const auto& r : rep.rows) bad += r.slack_transport < -1e-9;
    ok &= check(bad == 0, "zero W1^2 <= 2H violations on 1000 pairs", detail);
    bool sharp = true;
    for (const auto& s : rep.sharpness) sharp &= s.abs_slack_transport < 1e-8;
    ok &= check(sharp, "|W1^2 - 2H| < 1e-8 on the c x beta family", detail);
    ok &= check(timer.seconds() < 60.0, "runtime < 60 s", detail);
    return ok;
}

// ---- criterion 3: log-Sobolev ----------------------------------------------
bool criterion3(std::ostringstream& detail) {
    const VerifyReport& rep = sweep1000();
    bool ok = true;
    bool j2i = true, lsi = true;
    for (const auto& r : rep.rows) {
        j2i &= std::abs(r.j - 2.0 * r.i) < 1e-10;
        lsi &= r.slack_lsi >= -1e-9;
    }
    ok &= check(j2i, "|J - 2I| < 1e-10 on 1000 pairs", detail);
    ok &= check(lsi, "2H <= J on 1000 pairs", detail);

    Rng rng(202);
    SignedDifference d = SignedDifference::between(random_beta_density(rng, 16, 0.5),
                                                   random_beta_density(rng, 16, 0.5));
    bool scaled = true;
    for (double l : {0.5, 2.0, 5.0})
        scaled &= std::abs(fisher_J_scaled(d, l).value -
                           2.0 * l * l * fisher_I_scaled(d, l).value) < 1e-9;
    ok &= check(scaled, "J = 2 L^2 I_L for L in {0.5, 2, 5} to 1e-9", detail);
    return ok;
}

// ---- criterion 4: HWI -------------------------------------------------------
bool criterion4(std::ostringstream& detail) {
    const VerifyReport& rep = sweep1000();
    bool ok = true;
    int bad = 0;
    for (const auto& r : rep.rows) bad += r.slack_hwi < -1e-9;
    ok &= check(bad == 0, "HWI slack >= -1e-9 on 1000 pairs", detail);
    bool sharp = true;
    for (const auto& s : rep.sharpness) sharp &= s.abs_slack_hwi < 1e-8;
    ok &= check(sharp, "HWI equality on the c x beta family to 1e-8", detail);
    return ok;
}

// ---- criterion 5: geometric-family closed forms ------------------------------
bool criterion5(std::ostringstream& detail) {
    Timer timer;
    bool ok = true;

    // spectral H vs the discretized double log integral at (r, eta) = (0.5, 0.1)
    {
        const double r = 0.5, eta = 0.1;
        const int terms = 80;
        std::vector<double> g(terms + 1, 0.0);
        for (int n = 1; n <= terms; ++n) g[n] = eta * std::pow(r, n - 1.0);
        ChebSeries psi(g);
        double spectral = entropy_H(SignedDifference{psi}).value;
        std::vector<double> dens = g;
        dens[0] = 1.0;
        FunctionalValue oracle = log_energy(grid_from_density(BetaDensity(ChebSeries(dens)), 16000),
                                            grid_from_density(BetaDensity::arcsine(), 16000));
        ok &= check(std::abs(spectral - oracle.value) < 1e-6,
                    "spectral H matches double-quadrature oracle to 1e-6", detail);
    }

    // Parseval at p = 2
    {
        auto rows = lp_explorer(2.0, {0.5}, 0.1);
        ok &= check(std::abs(rows[0].lp_alpha - 0.01 / 0.75) < 1e-10,
                    "int |H|^2 d(alpha) = eta^2/(1-r^2) to 1e-10", detail);
    }

    // p = 3/2 slope
    {
        auto rows = lp_explorer(1.5, {0.9, 0.99, 0.999, 0.9999}, 1.0);
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
            xs.push_back(-std::log(1.0 - r.r));
            ys.push_back(r.lp_reduced);
        }
        double slope = fit_slope(xs, ys);
        ok &= check(std::abs(slope - 0.25) <= 0.05 * 0.25,
                    "p = 3/2 slope of the reduced integral = 0.25 +- 5%", detail);
        detail << " [slope=" << slope << "]";
    }

    // p = 1.4: explicit bound and >= 10x monotone growth of the ratio
    {
        std::vector<double> rs = {0.9, 0.99, 0.999, 0.9999};
        auto rows = lp_explorer(1.4, rs, 1.0);
        bool bounded = true, monotone = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            // bound 16 eta^p/(4r)^p * int_0^1 u^{1/2-p} du with 1/(3/2-p) = 10
            double bound = 16.0 * 10.0 / std::pow(4.0 * rows[i].r, 1.4);
            bounded &= rows[i].lp_alpha <= bound;
            if (i > 0) monotone &= rows[i].ratio > rows[i - 1].ratio;
        }
        double growth = rows.back().ratio / rows.front().ratio;
        ok &= check(bounded, "p = 1.4 integral stays below the explicit bound", detail);
        ok &= check(monotone && growth >= 10.0,
                    "H/(int |H|^1.4)^{10/7} grows monotonically by >= 10x", detail);
        detail << " [growth=" << growth << "x]";
    }

    ok &= check(timer.seconds() < 120.0, "runtime < 120 s", detail);
    return ok;
}

// ---- criterion 6: Pinsker failure --------------------------------------------
bool criterion6(std::ostringstream& detail) {
    bool ok = true;
    bool tv_ok = true, ratio_ok = true;
    for (int n = 1; n <= 32; ++n) {
        for (double c : {0.3, 1.0}) {
            SignedDifference d{mode(n, c)};
            double tv = total_variation(d).value;
            double h = entropy_H(d).value;
            tv_ok &= std::abs(tv - 2.0 * c / kPi) < 1e-8;
            ratio_ok &= std::abs(h / (tv * tv) - kPi * kPi / (8.0 * n)) < 1e-10;
        }
    }
    ok &= check(tv_ok, "TV(c phi_n) = 2|c|/pi to 1e-8 for n <= 32", detail);
    ok &= check(ratio_ok, "H/TV^2 = pi^2/(8n) to 1e-10", detail);
    return ok;
}

// ---- criterion 7: equilibrium ------------------------------------------------
bool criterion7(std::ostringstream& detail) {
    Timer timer;
    bool ok = true;
    Potential quad = Potential::polynomial({0.0, 0.0, 0.5});
    EquilibriumResult eq = solve_equilibrium(quad, 2000);
    GridMeasure semicircle = grid_from_density(BetaDensity::semicircle(), 2000);
    double w1 = wasserstein_p(eq.measure, semicircle, 1.0);
    ok &= check(w1 < 1e-2, "W1(solution, semicircle) < 1e-2 at 2000 cells", detail);
    ok &= check(std::abs(eq.robin_constant - 1.0) < 1e-2, "K_V = 1 +- 1e-2", detail);
    ok &= check(euler_lagrange_residual(eq, quad) < 5e-3, "E-L residual < 5e-3", detail);

    bool el_all = true;
    for (auto coeffs : {std::vector<double>{0.0, 0.0, 0.0, 0.0, 0.25},
                        std::vector<double>{1.0, 0.0, -2.0, 0.0, 1.0}}) {
        Potential v = Potential::polynomial(coeffs);
        el_all &= euler_lagrange_residual(solve_equilibrium(v, 2000), v) < 5e-3;
    }
    ok &= check(el_all, "E-L residual < 5e-3 for quartic potentials at 2000 cells", detail);

    DoubleWellReport dw = double_well_demo();
    ok &= check(dw.h_residual_1 < 1e-6 && dw.h_residual_2 < 1e-6,
                "sup |H mu_i - V'| < 1e-6 on each well", detail);
    ok &= check(timer.seconds() < 600.0, "runtime < 10 min", detail);
    return ok;
}

// ---- criterion 8: global transportation ---------------------------------------
bool criterion8(std::ostringstream& detail) {
    Potential quad = Potential::polynomial({0.0, 0.0, 0.5});
    EquilibriumResult eq = solve_equilibrium(quad, 1000);
    TransportCheckReport rep = global_transport_check(quad, eq, standard_test_family(eq));
    bool all_above = true;
    int tested = 0;
    for (const auto& e : rep.entries) {
        if (e.skipped) continue;
        ++tested;
        all_above &= e.ratio > rep.constant;
    }
    bool ok = check(tested >= 5, "at least 5 test measures evaluated", detail);
    ok &= check(all_above, "every ratio exceeds 2A/(12AL^2+9)", detail);
    detail << " [constant=" << rep.constant << " min_ratio=" << rep.min_ratio << "]";
    return ok;
}

// ---- criterion 9: dual formula -------------------------------------------------
bool criterion9(std::ostringstream& detail) {
    Rng rng(303);
    bool agree = true;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        BetaDensity mu = random_beta_density(rng, 10, 0.5);
        BetaDensity nu = random_beta_density(rng, 10, 0.5);
        double dual = w1_dual_spectral(SignedDifference::between(mu, nu));
        double quant = wasserstein_quantile(mu, nu, 1.0);
        worst = std::max(worst, std::abs(dual - quant));
        agree &= std::abs(dual - quant) < 1e-6;
    }
    bool ok = check(agree, "dual form matches quantile W1 to 1e-6 on 200 pairs", detail);
    detail << " [worst=" << worst << "]";

    SignedDifference d{mode(2, 0.37)};
    double w1 = w1_dual_spectral(d) / 0.37;
    double upper = std::sqrt(w1_sq_spectral_upper(d)) / 0.37;
    ok &= check(std::abs(w1 - 4.0 / (3.0 * kPi)) < 1e-6, "W1/|c| = 4/(3 pi) on c phi_2",
                detail);
    ok &= check(std::abs(upper - 0.5) < 1e-12, "sqrt(2<E^2 psi, psi>)/|c| = 0.5", detail);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::ostringstream&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "operator suite", criterion1},
        {2, "transportation inequality", criterion2},
        {3, "log-Sobolev inequality", criterion3},
        {4, "HWI inequality", criterion4},
        {5, "geometric-family closed forms", criterion5},
        {6, "Pinsker failure", criterion6},
        {7, "equilibrium measures", criterion7},
        {8, "global transportation", criterion8},
        {9, "dual W1 formula", criterion9},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        std::ostringstream detail;
        bool ok = c.run(detail);
        std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.str().c_str());
        std::fflush(stdout);
        failures += !ok;
    }
    return failures;
}
