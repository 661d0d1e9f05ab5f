#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "functionals.hpp"
#include "quadrature.hpp"

using namespace freeineq;

namespace {
constexpr double kPi = std::numbers::pi;

SignedDifference random_diff(Rng& rng, int deg, double rho) {
    BetaDensity mu = random_beta_density(rng, deg, rho);
    BetaDensity nu = random_beta_density(rng, deg, rho);
    return SignedDifference::between(mu, nu);
}

SignedDifference mode_diff(int n, double c) {
    std::vector<double> g(n + 1, 0.0);
    g[n] = c;
    return SignedDifference(ChebSeries(std::move(g)));
}
}  // namespace

TEST_CASE("entropy: spectral sum against the Fourier-Bessel oracle") {
    // The log-kernel energy of psi d(beta) has the Fourier representation
    // int_0^inf |sum_n gamma_n i^n J_n(2t)|^2 / t dt.
    Rng rng(2);
    SignedDifference diff = random_diff(rng, 4, 0.5);
    const auto& g = diff.coeffs.coeffs;
    auto integrand = [&](double t) {
        double re = 0.0, im = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n) {
            double j = std::cyl_bessel_j(static_cast<double>(n), 2.0 * t);
            switch (n % 4) {
                case 0: re += g[n] * j; break;
                case 1: im += g[n] * j; break;
                case 2: re -= g[n] * j; break;
                default: im -= g[n] * j; break;
            }
        }
        return (re * re + im * im) / t;
    };
    double oracle = composite_gl(integrand, 1e-8, 200.0, 3000);
    double h = entropy_H(diff).value;
    CHECK(std::abs(h - oracle) / h < 0.02);
}

TEST_CASE("entropy: spectral sum against the discretized log energy") {
    Rng rng(4);
    BetaDensity mu = random_beta_density(rng, 6, 0.5);
    BetaDensity nu = random_beta_density(rng, 6, 0.5);
    double spectral = entropy_H(mu, nu).value;
    FunctionalValue grid =
        log_energy(grid_from_density(mu, 4000), grid_from_density(nu, 4000));
    REQUIRE_FALSE(grid.is_infinite);
    CHECK(grid.value == doctest::Approx(spectral).epsilon(2e-4));
}

TEST_CASE("single-mode closed forms") {
    for (int n = 1; n <= 32; ++n) {
        SignedDifference d = mode_diff(n, 0.7);
        CHECK(entropy_H(d).value == doctest::Approx(0.49 / (2.0 * n)).epsilon(1e-13));
        CHECK(fisher_I(d).value == doctest::Approx(0.245).epsilon(1e-13));
        CHECK(total_variation(d).value ==
              doctest::Approx(2.0 * 0.7 / kPi).epsilon(1e-10));
    }
}

TEST_CASE("J equals 2I and lp at p=2 equals J") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        SignedDifference d = random_diff(rng, 3 + trial, 0.5);
        double i = fisher_I(d).value;
        double j = fisher_J(d).value;
        CHECK(std::abs(j - 2.0 * i) < 1e-12);
        CHECK(lp_integral(d, 2.0) == doctest::Approx(j).epsilon(1e-10));
        CHECK(lp_information(d, 2.0).value == doctest::Approx(j).epsilon(1e-10));
    }
}

TEST_CASE("scaled Fisher identity J_L = 2 L^2 I_L") {
    Rng rng(21);
    SignedDifference d = random_diff(rng, 8, 0.5);
    for (double l : {0.5, 2.0, 5.0}) {
        double i = fisher_I_scaled(d, l).value;
        double j = fisher_J_scaled(d, l).value;
        CHECK(std::abs(j - 2.0 * l * l * i) < 1e-9);
    }
    CHECK_THROWS_AS(fisher_J_scaled(d, -1.0), std::invalid_argument);
}

TEST_CASE("lp_integral against direct theta-space quadrature") {
    Rng rng(13);
    SignedDifference d = random_diff(rng, 6, 0.5);
    const SecondKindSeries h = hilbert(d);
    for (double p : {1.0, 1.4, 1.5}) {
        // brute force in theta with a fine midpoint rule (kinks are only
        // Holder, so convergence is slow but adequate as an oracle)
        const int n = 400000;
        double brute = 0.0;
        for (int k = 0; k < n; ++k) {
            double t = kPi * (k + 0.5) / n;
            double x = 2.0 * std::cos(t);
            double st = std::sin(t);
            brute += std::pow(std::abs(h.eval(x)), p) * (2.0 / kPi) * st * st * kPi / n;
        }
        CHECK(lp_integral(d, p) == doctest::Approx(brute).epsilon(1e-6));
    }
    CHECK_THROWS_AS(lp_integral(d, 0.5), std::invalid_argument);
}

TEST_CASE("total variation against direct quadrature") {
    Rng rng(31);
    SignedDifference d = random_diff(rng, 10, 0.5);
    // TV = int |psi| d(beta) = (1/pi) int_0^pi |psi(2 cos t)| dt
    const int n = 200000;
    double brute = 0.0;
    for (int k = 0; k < n; ++k) {
        double t = kPi * (k + 0.5) / n;
        brute += std::abs(d.coeffs.eval(2.0 * std::cos(t))) / n;
    }
    CHECK(total_variation(d).value == doctest::Approx(brute).epsilon(1e-8));
}

TEST_CASE("cell log kernel against graded numeric double integral") {
    auto numeric = [](double a1, double h1, double a2, double h2) {
        // inner integral analytic via G(t) = t log|t| - t, outer graded
        auto G = [](double t) { return t == 0.0 ? 0.0 : t * std::log(std::abs(t)) - t; };
        auto inner = [&](double x) {
            return (G(x - a2) - G(x - (a2 + h2))) / h2;
        };
        double left = graded_gl(inner, a1, a1 + 0.5 * h1, 50);
        double right = graded_gl([&](double x) { return inner(2.0 * a1 + 1.5 * h1 - x); },
                                 a1 + 0.5 * h1, a1 + h1, 50);
        return (left + right) / h1;
    };
    // identical, adjacent, and separated cells
    CHECK(cell_log_kernel(0.0, 0.1, 0.0, 0.1) ==
          doctest::Approx(numeric(0.0, 0.1, 0.0, 0.1)).epsilon(1e-8));
    CHECK(cell_log_kernel(0.0, 0.1, 0.1, 0.1) ==
          doctest::Approx(numeric(0.0, 0.1, 0.1, 0.1)).epsilon(1e-8));
    CHECK(cell_log_kernel(0.0, 0.2, 1.0, 0.1) ==
          doctest::Approx(numeric(0.0, 0.2, 1.0, 0.1)).epsilon(1e-10));
    // same-cell closed form: log h - 3/2
    CHECK(cell_log_kernel(0.0, 0.1, 0.0, 0.1) ==
          doctest::Approx(std::log(0.1) - 1.5).epsilon(1e-12));
}

TEST_CASE("log energy: atomic inputs are infinite, same-grid path consistent") {
    GridMeasure atom({0.0}, {1.0}, -1.0, 1.0, 0.0);
    GridMeasure cells = grid_from_density(BetaDensity::semicircle(), 256);
    CHECK(log_energy(atom, cells).is_infinite);
    CHECK_THROWS_AS(log_cross_energy(atom, cells), std::invalid_argument);

    GridMeasure other = grid_from_density(BetaDensity::arcsine(), 256);
    double fast = log_energy(cells, other).value;
    double slow = -(log_cross_energy(cells, cells) - 2.0 * log_cross_energy(cells, other) +
                    log_cross_energy(other, other));
    CHECK(fast == doctest::Approx(slow).epsilon(1e-11));
    CHECK(fast >= 0.0);
    CHECK(log_energy(cells, cells).value == doctest::Approx(0.0));
}
