#include "cheb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace freeineq {

namespace {
constexpr double kPi = std::numbers::pi;

void check_interval(double x, double tol = 0.0) {
    if (std::abs(x) > 2.0 + tol) throw std::domain_error("x outside [-2,2]");
}
}  // namespace

double eval_phi(int n, double x) {
    if (n < 0) throw std::invalid_argument("eval_phi: n must be >= 0");
    check_interval(x);
    const double u = x / 2.0;
    if (n == 0) return 1.0;
    double t0 = 1.0, t1 = u;
    for (int k = 2; k <= n; ++k) {
        double t2 = 2.0 * u * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

double eval_psi(int n, double x, bool allow_endpoint) {
    if (n < 0) throw std::invalid_argument("eval_psi: n must be >= 0");
    if (std::abs(x) >= 2.0) {
        if (!allow_endpoint || std::abs(x) > 2.0)
            throw std::domain_error("eval_psi: x outside (-2,2)");
        double limit = n + 1.0;
        return (x < 0.0 && n % 2 == 1) ? -limit : limit;
    }
    const double u = x / 2.0;
    double u0 = 1.0, u1 = 2.0 * u;
    if (n == 0) return u0;
    for (int k = 2; k <= n; ++k) {
        double u2 = 2.0 * u * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

double ChebSeries::eval(double x) const {
    check_interval(x, 1e-12);
    if (coeffs.empty()) return 0.0;
    const double u = x / 2.0;
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
        double b0 = coeffs[k] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs[0] + u * b1 - b2;
}

double SecondKindSeries::eval(double x, bool allow_endpoint) const {
    if (coeffs.empty()) return 0.0;
    if (std::abs(x) >= 2.0) {
        if (!allow_endpoint || std::abs(x) > 2.0)
            throw std::domain_error("SecondKindSeries::eval: x outside (-2,2)");
        double s = 0.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n) s += coeffs[n] * eval_psi(static_cast<int>(n), x, true);
        return s;
    }
    const double u = x / 2.0;
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        double b0 = coeffs[k] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    // For the U-basis, Clenshaw terminates with f = b_0 (U_1 = 2u U_0).
    return b1;
}

SecondKindSeries derivative(const ChebSeries& f) {
    const int n = f.degree();
    std::vector<double> c(std::max(0, n), 0.0);
    for (int k = 1; k <= n; ++k) c[k - 1] = 0.5 * k * f.coeffs[k];
    return SecondKindSeries(std::move(c));
}

QuadratureRule QuadratureRule::beta(int k) {
    if (k < 1) throw std::invalid_argument("beta rule: k >= 1 required");
    QuadratureRule r;
    r.weight_kind = WeightKind::beta;
    r.nodes.resize(k);
    r.weights.assign(k, 1.0 / k);
    for (int i = 1; i <= k; ++i)
        r.nodes[i - 1] = 2.0 * std::cos(kPi * (2.0 * i - 1.0) / (2.0 * k));
    return r;
}

QuadratureRule QuadratureRule::alpha(int k) {
    if (k < 1) throw std::invalid_argument("alpha rule: k >= 1 required");
    QuadratureRule r;
    r.weight_kind = WeightKind::alpha;
    r.nodes.resize(k);
    r.weights.resize(k);
    for (int i = 1; i <= k; ++i) {
        double theta = kPi * i / (k + 1.0);
        r.nodes[i - 1] = 2.0 * std::cos(theta);
        double s = std::sin(theta);
        r.weights[i - 1] = 2.0 * s * s / (k + 1.0);
    }
    return r;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
}

double QuadratureRule::integrate(std::span<const double> values) const {
    if (values.size() != nodes.size())
        throw std::invalid_argument("QuadratureRule::integrate: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * values[i];
    return s;
}

double beta_integral(const ChebSeries& f) { return f.coeffs.empty() ? 0.0 : f.coeffs[0]; }

double beta_integral(const std::function<double(double)>& f, int k) {
    return QuadratureRule::beta(k).integrate(f);
}

double alpha_integral(const std::function<double(double)>& f, int k) {
    return QuadratureRule::alpha(k).integrate(f);
}

double alpha_integral(const SecondKindSeries& f) {
    // psi_0 is the only basis function with nonzero alpha-mean; <psi_0,1>_alpha = 1.
    return f.coeffs.empty() ? 0.0 : f.coeffs[0];
}

ChebSeries project(std::span<const double> values, const QuadratureRule& rule, int max_degree) {
    if (rule.weight_kind != WeightKind::beta)
        throw std::invalid_argument("project: beta rule required");
    if (values.size() != rule.size())
        throw std::invalid_argument("project: values/rule length mismatch");
    std::vector<double> gamma(max_degree + 1, 0.0);
    for (int n = 0; n <= max_degree; ++n) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            s += rule.weights[i] * values[i] * eval_phi(n, rule.nodes[i]);
        gamma[n] = (n == 0 ? 1.0 : 2.0) * s;
    }
    return ChebSeries(std::move(gamma));
}

ChebSeries project(const std::function<double(double)>& f, int max_degree) {
    QuadratureRule rule = QuadratureRule::beta(default_rule_size(max_degree));
    std::vector<double> values(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) values[i] = f(rule.nodes[i]);
    return project(values, rule, max_degree);
}

}  // namespace freeineq
