#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace freeineq {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: n must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on Legendre polynomials, Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a,
                                double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
    return half * s;
}

namespace {
const GaussLegendre& gl_rule(int n) {
    static const GaussLegendre gl8(8), gl16(16), gl32(32), gl64(64);
    switch (n) {
        case 8: return gl8;
        case 16: return gl16;
        case 32: return gl32;
        default: return gl64;
    }
}
}  // namespace

double composite_gl(const std::function<double(double)>& f, double a, double b, int panels,
                    int points_per_panel) {
    const GaussLegendre& gl = gl_rule(points_per_panel);
    double s = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) s += gl.integrate(f, a + i * h, a + (i + 1) * h);
    return s;
}

namespace {
std::vector<double> isolate_roots(const std::function<double(double)>& f, double a, double b,
                                  int scan_points) {
    std::vector<double> cuts;
    cuts.push_back(a);
    const double h = (b - a) / scan_points;
    double x0 = a, f0 = f(a);
    for (int i = 1; i <= scan_points; ++i) {
        double x1 = a + i * h;
        double f1 = f(x1);
        if (f0 == 0.0) {
            // grid point is a root; panel boundary already usable
        } else if (f0 * f1 < 0.0) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 80; ++it) {
                double m = 0.5 * (lo + hi);
                double fm = f(m);
                if (fm == 0.0) {
                    lo = hi = m;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = m;
                } else {
                    lo = m;
                    flo = fm;
                }
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    cuts.push_back(b);
    return cuts;
}
}  // namespace

double integrate_abs(const std::function<double(double)>& f, double a, double b,
                     int scan_points) {
    return integrate_abs_weighted(f, [](double) { return 1.0; }, a, b, scan_points);
}

double integrate_abs_weighted(const std::function<double(double)>& f,
                              const std::function<double(double)>& g, double a, double b,
                              int scan_points) {
    const std::vector<double> cuts = isolate_roots(f, a, b, scan_points);
    const GaussLegendre& gl = gl_rule(32);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += std::abs(
            gl.integrate([&](double x) { return f(x) * g(x); }, cuts[i], cuts[i + 1]));
    }
    return total;
}

double integrate_abs_pow(const std::function<double(double)>& f,
                         const std::function<double(double)>& w, double p, double a, double b,
                         int scan_points) {
    const std::vector<double> cuts = isolate_roots(f, a, b, scan_points);
    auto integrand = [&](double x) { return std::pow(std::abs(f(x)), p) * w(x); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (hi - lo < 1e-14) continue;
        const double mid = 0.5 * (lo + hi);
        // both segment ends are cuts; grade toward each
        total += graded_gl(integrand, lo, mid, 40);
        total += graded_gl([&](double x) { return integrand(hi + mid - x); }, mid, hi, 40);
    }
    return total;
}

double graded_gl(const std::function<double(double)>& f, double a, double b, int levels,
                 double ratio, int points_per_panel) {
    const GaussLegendre& gl = gl_rule(points_per_panel);
    double total = 0.0;
    double right = b;
    double width = (b - a) * (1.0 - ratio);
    for (int k = 0; k < levels - 1; ++k) {
        double left = right - width;
        total += gl.integrate(f, left, right);
        right = left;
        width *= ratio;
    }
    total += gl.integrate(f, a, right);
    return total;
}

}  // namespace freeineq
