#include "measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace freeineq {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNegTol = 1e-9;

double min_on_check_grid(const ChebSeries& s) {
    const int k = default_rule_size(s.degree());
    double m = std::numeric_limits<double>::infinity();
    // beta-quadrature nodes plus a 10x denser grid
    for (const double x : QuadratureRule::beta(k).nodes) m = std::min(m, s.eval(x));
    const int dense = 10 * k;
    for (int i = 0; i <= dense; ++i) {
        double x = 2.0 * std::cos(kPi * i / dense);
        m = std::min(m, s.eval(x));
    }
    return m;
}
}  // namespace

BetaDensity::BetaDensity(ChebSeries density) : density_(std::move(density)) {
    if (density_.coeffs.empty()) throw std::invalid_argument("BetaDensity: empty series");
    if (std::abs(density_.coeffs[0] - 1.0) > 1e-12)
        throw std::invalid_argument("BetaDensity: gamma_0 must equal 1 (unit mass)");
    density_.coeffs[0] = 1.0;
    for (double c : density_.coeffs)
        if (!std::isfinite(c)) throw std::invalid_argument("BetaDensity: nonfinite coefficient");
    if (min_on_check_grid(density_) < -kNegTol)
        throw std::invalid_argument("BetaDensity: density negative beyond tolerance");
}

BetaDensity BetaDensity::arcsine() { return BetaDensity(ChebSeries({1.0})); }

BetaDensity BetaDensity::semicircle() {
    return BetaDensity(ChebSeries({1.0, 0.0, -1.0}));
}

SignedDifference::SignedDifference(ChebSeries c) : coeffs(std::move(c)) {
    if (!coeffs.coeffs.empty() && std::abs(coeffs.coeffs[0]) > 1e-12)
        throw std::invalid_argument("SignedDifference: gamma_0 must be 0");
    if (!coeffs.coeffs.empty()) coeffs.coeffs[0] = 0.0;
}

SignedDifference SignedDifference::between(const BetaDensity& mu, const BetaDensity& nu) {
    const auto& a = mu.density().coeffs;
    const auto& b = nu.density().coeffs;
    std::vector<double> d(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) d[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) d[i] -= b[i];
    return SignedDifference(ChebSeries(std::move(d)));
}

double SignedDifference::l2_beta_norm_sq() const {
    double s = 0.0;
    for (std::size_t n = 1; n < coeffs.coeffs.size(); ++n)
        s += 0.5 * coeffs.coeffs[n] * coeffs.coeffs[n];
    return s;
}

GridMeasure::GridMeasure(std::vector<double> nodes_, std::vector<double> weights_, double a_,
                         double b_, double cell_width_)
    : nodes(std::move(nodes_)), weights(std::move(weights_)), a(a_), b(b_),
      cell_width(cell_width_) {
    if (nodes.size() != weights.size() || nodes.empty())
        throw std::invalid_argument("GridMeasure: nodes/weights mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0 && nodes[i] <= nodes[i - 1])
            throw std::invalid_argument("GridMeasure: nodes must be strictly increasing");
        if (weights[i] < -1e-14) throw std::invalid_argument("GridMeasure: negative weight");
        if (nodes[i] < a - 1e-12 || nodes[i] > b + 1e-12)
            throw std::invalid_argument("GridMeasure: node outside interval");
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("GridMeasure: weights must sum to 1");
}

double GridMeasure::cdf(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size() && nodes[i] <= x; ++i) s += weights[i];
    return s;
}

double GridMeasure::quantile(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        s += weights[i];
        if (s >= t - 1e-15) return nodes[i];
    }
    return nodes.back();
}

double GridMeasure::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += nodes[i] * weights[i];
    return s;
}

GridMeasure GridMeasure::affine(double scale, double shift) const {
    if (scale <= 0.0) throw std::invalid_argument("GridMeasure::affine: scale must be > 0");
    std::vector<double> n(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) n[i] = scale * nodes[i] + shift;
    return GridMeasure(std::move(n), weights, scale * a + shift, scale * b + shift,
                       scale * cell_width);
}

ScaledMeasure::ScaledMeasure(BetaDensity base_, double half_width_)
    : base(std::move(base_)), half_width(half_width_) {
    if (half_width <= 0.0) throw std::invalid_argument("ScaledMeasure: L must be > 0");
}

double cdf(const ChebSeries& density, double x) {
    if (std::abs(x) > 2.0 + 1e-12) throw std::domain_error("cdf: x outside [-2,2]");
    x = std::clamp(x, -2.0, 2.0);
    const double theta = std::acos(x / 2.0);
    const auto& g = density.coeffs;
    double s = g.empty() ? 0.0 : g[0] * (kPi - theta);
    for (std::size_t n = 1; n < g.size(); ++n) s -= g[n] * std::sin(n * theta) / n;
    return s / kPi;
}

double cdf(const BetaDensity& mu, double x) { return cdf(mu.density(), x); }

double quantile(const BetaDensity& mu, double t) {
    if (t <= 0.0) return -2.0;
    if (t >= 1.0) return 2.0;
    // F is nonincreasing in theta; bisect to 1e-12 in t, returning the
    // left-continuous generalized inverse (smallest x with F(x) >= t).
    double lo = 0.0, hi = kPi;  // theta(hi) -> x=-2, theta(lo) -> x=2
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        double f = cdf(mu.density(), 2.0 * std::cos(mid));
        if (f >= t) lo = mid; else hi = mid;
        if (hi - lo < 1e-15) break;
    }
    return 2.0 * std::cos(0.5 * (lo + hi));
}

ScaledMeasure rescale(const BetaDensity& mu, double half_width) {
    return ScaledMeasure(mu, half_width);
}

GridMeasure grid_from_density(const BetaDensity& mu, int n_cells) {
    if (n_cells < 2) throw std::invalid_argument("grid_from_density: n_cells >= 2 required");
    const double h = 4.0 / n_cells;
    std::vector<double> nodes(n_cells), w(n_cells);
    double prev = 0.0;
    for (int i = 0; i < n_cells; ++i) {
        nodes[i] = -2.0 + (i + 0.5) * h;
        double right = (i == n_cells - 1) ? 1.0 : cdf(mu, -2.0 + (i + 1) * h);
        w[i] = std::max(0.0, right - prev);
        prev = right;
    }
    // renormalize rounding dust
    double total = 0.0;
    for (double x : w) total += x;
    for (double& x : w) x /= total;
    return GridMeasure(std::move(nodes), std::move(w), -2.0, 2.0, h);
}

Rng::Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

double Rng::uniform() {
    // splitmix64 step; top 53 bits to double
    s_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

BetaDensity random_beta_density(Rng& rng, int max_degree, double rho) {
    std::vector<double> g(max_degree + 1);
    g[0] = 1.0;
    double r = rho;
    for (int n = 1; n <= max_degree; ++n) {
        g[n] = rng.uniform(-1.0, 1.0) * r;
        r *= rho;
    }
    ChebSeries s(std::move(g));
    double m = std::numeric_limits<double>::infinity();
    const int dense = 40 * (max_degree + 1);
    for (int i = 0; i <= dense; ++i)
        m = std::min(m, s.eval(2.0 * std::cos(kPi * i / dense)));
    constexpr double kFloor = 0.01;
    if (m < kFloor) {
        // (phi + c)/(1 + c) has minimum (m + c)/(1 + c) = kFloor
        double c = (kFloor - m) / (1.0 - kFloor);
        for (auto& x : s.coeffs) x /= (1.0 + c);
        s.coeffs[0] = 1.0;
    }
    return BetaDensity(std::move(s));
}

}  // namespace freeineq
