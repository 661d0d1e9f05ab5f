#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace freeineq {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1,1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n);

    /// Integrate f over [a,b].
    double integrate(const std::function<double(double)>& f, double a, double b) const;
};

/// Integrate f over [a,b] with an m-panel composite Gauss-Legendre rule.
double composite_gl(const std::function<double(double)>& f, double a, double b, int panels,
                    int points_per_panel = 16);

/// Integrate |f| over [a,b] for a smooth f: isolates the sign changes of f by
/// sampling on a dense grid plus bisection, then integrates panel-wise between
/// consecutive roots.  Exact to quadrature precision for trigonometric or
/// polynomial f of moderate degree.
double integrate_abs(const std::function<double(double)>& f, double a, double b,
                     int scan_points = 2048);

/// Same root isolation but integrates g(x)*|f(x)| (g smooth and nonnegative).
double integrate_abs_weighted(const std::function<double(double)>& f,
                              const std::function<double(double)>& g, double a, double b,
                              int scan_points = 2048);

/// Integrate |f(x)|^p * w(x) over [a,b] for smooth f with isolated roots and
/// smooth w: cuts at the roots of f and grades panels toward the cuts, where
/// |f|^p is only Holder continuous for non-integer p.
double integrate_abs_pow(const std::function<double(double)>& f,
                         const std::function<double(double)>& w, double p, double a, double b,
                         int scan_points = 2048);

/// Integrate f over [a,b] with panels geometrically graded toward the left
/// endpoint a (for integrable endpoint singularities or sharp peaks at a).
/// The first panel has width (b-a)*ratio^(levels-1).
double graded_gl(const std::function<double(double)>& f, double a, double b, int levels,
                 double ratio = 0.5, int points_per_panel = 32);

}  // namespace freeineq
