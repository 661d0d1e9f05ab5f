#include "functionals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quadrature.hpp"

namespace freeineq {

namespace {
constexpr double kPi = std::numbers::pi;

double sum_weighted_sq(const ChebSeries& diff, double mode_weight(int)) {
    double s = 0.0;
    for (std::size_t n = 1; n < diff.coeffs.size(); ++n)
        s += diff.coeffs[n] * diff.coeffs[n] * mode_weight(static_cast<int>(n));
    return s;
}

}  // namespace

FunctionalValue entropy_H(const SignedDifference& diff) {
    return FunctionalValue::finite(
        sum_weighted_sq(diff.coeffs, [](int n) { return 0.5 / n; }));
}

FunctionalValue entropy_H(const BetaDensity& mu, const BetaDensity& nu) {
    return entropy_H(SignedDifference::between(mu, nu));
}

FunctionalValue fisher_I(const SignedDifference& diff) {
    return FunctionalValue::finite(
        sum_weighted_sq(diff.coeffs, [](int) { return 0.5; }));
}

FunctionalValue fisher_I(const BetaDensity& mu, const BetaDensity& nu) {
    return fisher_I(SignedDifference::between(mu, nu));
}

FunctionalValue fisher_J(const SignedDifference& diff) {
    const SecondKindSeries dh = hilbert(diff.coeffs);
    const QuadratureRule rule = QuadratureRule::alpha(default_rule_size(diff.coeffs.degree()));
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double v = dh.eval(rule.nodes[i]);
        s += rule.weights[i] * v * v;
    }
    return FunctionalValue::finite(s, FunctionalValue::Method::quadrature);
}

FunctionalValue fisher_J(const BetaDensity& mu, const BetaDensity& nu) {
    return fisher_J(SignedDifference::between(mu, nu));
}

FunctionalValue fisher_I_scaled(const SignedDifference& diff, double L) {
    if (L <= 0.0) throw std::invalid_argument("fisher_I_scaled: L must be > 0");
    // The arcsine density ratio is invariant under the pushforward, so the
    // scaled Fisher information coincides with the unscaled one.
    return fisher_I(diff);
}

FunctionalValue fisher_J_scaled(const SignedDifference& diff, double L) {
    if (L <= 0.0) throw std::invalid_argument("fisher_J_scaled: L must be > 0");
    // Pair pushed forward under x -> x/L onto [-2/L, 2/L].  Quadrature
    // against the semicircle law of that interval; the transform scales as
    // H(mu_s)(x/L) = L * H(mu)(x).
    const SecondKindSeries dh = hilbert(diff.coeffs);
    const QuadratureRule rule = QuadratureRule::alpha(default_rule_size(diff.coeffs.degree()));
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double v = L * dh.eval(rule.nodes[i]);
        s += rule.weights[i] * v * v;
    }
    return FunctionalValue::finite(s, FunctionalValue::Method::quadrature);
}

double lp_integral(const SignedDifference& diff, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_integral: p must be >= 1");
    const SecondKindSeries dh = hilbert(diff.coeffs);
    const auto& c = dh.coeffs;
    if (c.empty()) return 0.0;
    // x = 2 cos(theta):  H(x) = T(theta)/sin(theta), T = sum c_n sin((n+1)t),
    // d(alpha) = (2/pi) sin^2(theta) d(theta).
    auto trig = [&](double t) {
        double s = 0.0;
        for (std::size_t n = 0; n < c.size(); ++n) s += c[n] * std::sin((n + 1.0) * t);
        return s;
    };
    auto weight = [&](double t) { return std::pow(std::sin(t), 2.0 - p); };
    int scan = std::max(2048, 64 * (dh.degree() + 2));
    return (2.0 / kPi) * integrate_abs_pow(trig, weight, p, 0.0, kPi, scan);
}

FunctionalValue lp_information(const SignedDifference& diff, double p) {
    return FunctionalValue::finite(std::pow(lp_integral(diff, p), 2.0 / p),
                                   FunctionalValue::Method::quadrature);
}

FunctionalValue lp_information(const BetaDensity& mu, const BetaDensity& nu, double p) {
    return lp_information(SignedDifference::between(mu, nu), p);
}

FunctionalValue total_variation(const SignedDifference& diff) {
    const auto& g = diff.coeffs.coeffs;
    if (g.size() <= 1) return FunctionalValue::finite(0.0);
    auto psi = [&](double t) {
        double s = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n) s += g[n] * std::cos(n * t);
        return s;
    };
    int scan = std::max(2048, 64 * static_cast<int>(g.size()));
    double v = integrate_abs(psi, 0.0, kPi, scan) / kPi;
    return FunctionalValue::finite(v, FunctionalValue::Method::quadrature);
}

FunctionalValue total_variation(const BetaDensity& mu, const BetaDensity& nu) {
    return total_variation(SignedDifference::between(mu, nu));
}

double cell_log_kernel(double a1, double h1, double a2, double h2) {
    // K''(t) = log|t| with K(t) = (t^2/2) log|t| - (3/4) t^2, K(0) = 0.
    auto K = [](double t) {
        if (t == 0.0) return 0.0;
        return 0.5 * t * t * std::log(std::abs(t)) - 0.75 * t * t;
    };
    const double b1 = a1 + h1, b2 = a2 + h2;
    double v = K(b2 - a1) - K(b2 - b1) - K(a2 - a1) + K(a2 - b1);
    return v / (h1 * h2);
}

double log_cross_energy(const GridMeasure& mu, const GridMeasure& nu) {
    if (mu.atomic() || nu.atomic())
        throw std::invalid_argument("log_cross_energy: cell-based measures required");
    const double h1 = mu.cell_width, h2 = nu.cell_width;
    const double near = 8.0 * std::max(h1, h2);
    double s = 0.0;
    for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
        if (mu.weights[i] == 0.0) continue;
        for (std::size_t j = 0; j < nu.nodes.size(); ++j) {
            if (nu.weights[j] == 0.0) continue;
            double d = std::abs(mu.nodes[i] - nu.nodes[j]);
            double k = (d <= near)
                           ? cell_log_kernel(mu.nodes[i] - 0.5 * h1, h1,
                                             nu.nodes[j] - 0.5 * h2, h2)
                           : std::log(d);
            s += mu.weights[i] * nu.weights[j] * k;
        }
    }
    return s;
}

FunctionalValue log_energy(const GridMeasure& mu, const GridMeasure& nu) {
    if (mu.atomic() || nu.atomic()) return FunctionalValue::infinite();
    const bool same_grid = mu.cell_width == nu.cell_width && mu.nodes.size() == nu.nodes.size() &&
                           mu.nodes.front() == nu.nodes.front() &&
                           mu.nodes.back() == nu.nodes.back();
    if (same_grid) {
        const std::size_t n = mu.nodes.size();
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = mu.weights[i] - nu.weights[i];
        const double h = mu.cell_width;
        const double diag = std::log(h) - 1.5;  // cell-averaged log over the same cell
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i] == 0.0) continue;
            s += d[i] * d[i] * diag;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (d[j] == 0.0) continue;
                double dist = mu.nodes[j] - mu.nodes[i];
                double k = (j - i <= 8) ? cell_log_kernel(0.0, h, dist, h) : std::log(dist);
                s += 2.0 * d[i] * d[j] * k;
            }
        }
        return FunctionalValue::finite(std::max(0.0, -s), FunctionalValue::Method::quadrature);
    }
    double s = log_cross_energy(mu, mu) - 2.0 * log_cross_energy(mu, nu) +
               log_cross_energy(nu, nu);
    return FunctionalValue::finite(std::max(0.0, -s), FunctionalValue::Method::quadrature);
}

FunctionalValue relative_entropy_ev(const GridMeasure& mu, const GridMeasure& mu_v,
                                    const std::function<double(double)>& v_minus_u) {
    FunctionalValue h = log_energy(mu, mu_v);
    if (h.is_infinite) return FunctionalValue::infinite();
    double lin = 0.0;
    for (std::size_t i = 0; i < mu.nodes.size(); ++i)
        lin += mu.weights[i] * v_minus_u(mu.nodes[i]);
    return FunctionalValue::finite(lin + h.value, FunctionalValue::Method::quadrature);
}

}  // namespace freeineq
