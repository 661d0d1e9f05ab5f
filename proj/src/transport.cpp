#include "transport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quadrature.hpp"

namespace freeineq {

namespace {
constexpr double kPi = std::numbers::pi;

// shared 2000-point rule for quantile integrals
const GaussLegendre& quantile_rule() {
    static const GaussLegendre rule(2000);
    return rule;
}

double quantile_wp(const std::function<double(double)>& qmu,
                   const std::function<double(double)>& qnu, double p) {
    const auto& rule = quantile_rule();
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = 0.5 * (rule.nodes[i] + 1.0);
        s += 0.5 * rule.weights[i] * std::pow(std::abs(qmu(t) - qnu(t)), p);
    }
    return std::pow(s, 1.0 / p);
}

double w1_xspace(const SignedDifference& diff) {
    // F_mu - F_nu at x = 2 cos(theta) is -(1/pi) sum gamma_n sin(n theta)/n;
    // dx = 2 sin(theta) d(theta), so W1 = (2/pi) int_0^pi |...| sin d(theta).
    const auto& g = diff.coeffs.coeffs;
    auto f = [&](double t) {
        double s = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n) s += g[n] * std::sin(n * t) / n;
        return s;
    };
    int scan = std::max(2048, 64 * static_cast<int>(g.size()));
    return (2.0 / kPi) *
           integrate_abs_weighted(f, [](double t) { return std::sin(t); }, 0.0, kPi, scan);
}
}  // namespace

double wasserstein_p(const BetaDensity& mu, const BetaDensity& nu, double p) {
    if (p < 1.0) throw std::invalid_argument("wasserstein_p: p must be >= 1");
    if (p == 1.0) return w1_xspace(SignedDifference::between(mu, nu));
    return quantile_wp([&](double t) { return quantile(mu, t); },
                       [&](double t) { return quantile(nu, t); }, p);
}

double wasserstein_quantile(const BetaDensity& mu, const BetaDensity& nu, double p) {
    if (p < 1.0) throw std::invalid_argument("wasserstein_quantile: p must be >= 1");
    return quantile_wp([&](double t) { return quantile(mu, t); },
                       [&](double t) { return quantile(nu, t); }, p);
}

double wasserstein_p(const ScaledMeasure& mu, const ScaledMeasure& nu, double p) {
    if (p < 1.0) throw std::invalid_argument("wasserstein_p: p must be >= 1");
    if (mu.half_width != nu.half_width)
        throw std::invalid_argument("wasserstein_p: half-widths must agree");
    const double L = mu.half_width;
    return quantile_wp([&](double t) { return L * quantile(mu.base, t); },
                       [&](double t) { return L * quantile(nu.base, t); }, p);
}

double wasserstein_p(const GridMeasure& mu, const GridMeasure& nu, double p) {
    if (p < 1.0) throw std::invalid_argument("wasserstein_p: p must be >= 1");
    // north-west corner coupling on sorted atoms
    std::size_t i = 0, j = 0;
    double ri = mu.weights[0], rj = nu.weights[0];
    double s = 0.0;
    while (i < mu.nodes.size() && j < nu.nodes.size()) {
        double m = std::min(ri, rj);
        if (m > 0.0) s += m * std::pow(std::abs(mu.nodes[i] - nu.nodes[j]), p);
        ri -= m;
        rj -= m;
        if (ri <= 1e-16) { ++i; if (i < mu.nodes.size()) ri = mu.weights[i]; }
        if (rj <= 1e-16) { ++j; if (j < nu.nodes.size()) rj = nu.weights[j]; }
    }
    return std::pow(s, 1.0 / p);
}

double w1_dual_spectral(const SignedDifference& diff) {
    const auto& g = diff.coeffs.coeffs;
    // sum (gamma_n/n) psi_{n-1}(2 cos t) = [sum gamma_n sin(n t)/n] / sin t;
    // against d(alpha) = (2/pi) sin^2 t dt the 1/sin cancels one factor.
    auto f = [&](double t) {
        double s = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n) s += g[n] * std::sin(n * t) / n;
        return s;
    };
    int scan = std::max(2048, 64 * static_cast<int>(g.size()));
    return (2.0 / kPi) *
           integrate_abs_weighted(f, [](double t) { return std::sin(t); }, 0.0, kPi, scan);
}

double w1_sq_spectral_upper(const SignedDifference& diff) {
    const auto& g = diff.coeffs.coeffs;
    double s = 0.0;
    for (std::size_t n = 1; n < g.size(); ++n) s += g[n] * g[n] / (static_cast<double>(n) * n);
    return s;
}

std::function<double(double)> monotone_map(const BetaDensity& mu, const BetaDensity& nu) {
    return [mu, nu](double x) { return quantile(mu, cdf(nu, x)); };
}

}  // namespace freeineq
