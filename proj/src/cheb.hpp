#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace freeineq {

// Reference interval is [-2,2] throughout.  phi_n(x) = T_n(x/2) is orthogonal
// for the arcsine law beta(dx) = dx/(pi sqrt(4-x^2)); psi_n(x) = U_n(x/2) is
// orthonormal for the semicircle law alpha(dx) = sqrt(4-x^2)/(2 pi) dx.

/// T_n(x/2).  Throws std::domain_error if |x| > 2.
double eval_phi(int n, double x);

/// U_n(x/2).  Throws std::domain_error if |x| >= 2 unless allow_endpoint is
/// set, in which case the limit value (n+1)*sign(x/2)^n is returned at +-2.
double eval_psi(int n, double x, bool allow_endpoint = false);

/// Expansion in the phi_n basis: f(x) = sum_n coeffs[n] * T_n(x/2).
struct ChebSeries {
    std::vector<double> coeffs;

    ChebSeries() = default;
    explicit ChebSeries(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Clenshaw evaluation.
    double eval(double x) const;
};

/// Expansion in the psi_n basis: f(x) = sum_n coeffs[n] * U_n(x/2).
struct SecondKindSeries {
    std::vector<double> coeffs;

    SecondKindSeries() = default;
    explicit SecondKindSeries(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    double eval(double x, bool allow_endpoint = false) const;
};

/// Derivative of a first-kind series, via phi_n' = (n/2) psi_{n-1}.
SecondKindSeries derivative(const ChebSeries& f);

enum class WeightKind { alpha, beta };

/// Gauss rule integrating exactly against alpha or beta up to degree 2K-1.
/// beta nodes: 2 cos(pi(2k-1)/(2K)), uniform weights 1/K.
/// alpha nodes: 2 cos(k pi/(K+1)), weights 2 sin^2(k pi/(K+1))/(K+1).
struct QuadratureRule {
    WeightKind weight_kind;
    std::vector<double> nodes;
    std::vector<double> weights;

    static QuadratureRule beta(int k);
    static QuadratureRule alpha(int k);

    std::size_t size() const { return nodes.size(); }

    double integrate(const std::function<double(double)>& f) const;
    double integrate(std::span<const double> values_at_nodes) const;
};

/// Default quadrature size for a series of degree n: exact for all quadratic
/// functionals of the series.
inline int default_rule_size(int degree) { return 4 * (degree + 1); }

/// Integral of a series against beta; equals coeffs[0].
double beta_integral(const ChebSeries& f);

/// Integral of an arbitrary function against beta by quadrature.
double beta_integral(const std::function<double(double)>& f, int k = 256);

/// Integral of an arbitrary function against alpha by quadrature.
double alpha_integral(const std::function<double(double)>& f, int k = 256);

/// Integral of a second-kind series against alpha (quadrature, exact).
double alpha_integral(const SecondKindSeries& f);

/// Coefficients gamma_n = c_n * int f phi_n dbeta (c_0 = 1, c_n = 2 for n>=1)
/// from values sampled at the nodes of a beta rule.  Round-trips polynomials
/// of degree <= max_degree when the rule is large enough.
ChebSeries project(std::span<const double> values, const QuadratureRule& rule, int max_degree);

/// Convenience: project f itself using a rule of size 4*(max_degree+1).
ChebSeries project(const std::function<double(double)>& f, int max_degree);

}  // namespace freeineq
