#include "equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "transport.hpp"

namespace freeineq {

namespace {

// Certify V(x)/x^2 >= A/2 for |x| > B by scanning; also find a lower bound.
void certify_growth(const std::function<double(double)>& v, double a, Potential& out) {
    constexpr double kScanMax = 60.0;
    double b = 0.0;
    for (double x = 0.01; x <= kScanMax; x += 0.01) {
        if (v(x) / (x * x) < 0.5 * a || v(-x) / (x * x) < 0.5 * a) b = x;
    }
    if (b >= kScanMax - 0.02)
        throw std::invalid_argument("potential: growth certificate failed on scan range");
    out.A = a;
    out.B = b + 0.02;
    double lo = v(0.0);
    const double r = 2.0 * out.B + 4.0;
    for (int i = 0; i <= 4000; ++i) lo = std::min(lo, v(-r + 2.0 * r * i / 4000.0));
    out.lower_bound = lo;
}

// (1/h) int_cell log|x - y| dy for the cell [c - h/2, c + h/2], exact.
double point_cell_log(double x, double c, double h) {
    auto G = [](double t) { return t == 0.0 ? 0.0 : t * std::log(std::abs(t)) - t; };
    return (G(x - (c - 0.5 * h)) - G(x - (c + 0.5 * h))) / h;
}

// Cell-averaged log kernel matrix for uniform midpoint cells.
std::vector<double> build_kernel(const std::vector<double>& nodes, double h) {
    const std::size_t n = nodes.size();
    std::vector<double> k(n * n);
    const double diag = std::log(h) - 1.5;
    for (std::size_t i = 0; i < n; ++i) {
        k[i * n + i] = diag;
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = nodes[j] - nodes[i];
            double v = (j - i <= 8) ? cell_log_kernel(0.0, h, d, h) : std::log(d);
            k[i * n + j] = v;
            k[j * n + i] = v;
        }
    }
    return k;
}

std::vector<double> matvec(const std::vector<double>& k, const std::vector<double>& w) {
    const std::size_t n = w.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = &k[i * n];
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * w[j];
        out[i] = s;
    }
    return out;
}

// Euclidean projection onto the probability simplex (sort-based).
void project_simplex(std::vector<double>& w) {
    std::vector<double> u = w;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0.0, tau = 0.0;
    int rho = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        cum += u[k];
        double t = (cum - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) { rho = static_cast<int>(k + 1); tau = t; }
    }
    (void)rho;
    for (auto& x : w) x = std::max(0.0, x - tau);
}

struct DiscreteProblem {
    std::vector<double> nodes;
    std::vector<double> pot;     // V(x_i)
    std::vector<double> kernel;  // n x n
    double h = 0.0;

    double energy(const std::vector<double>& w, const std::vector<double>& kw) const {
        double s = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * (pot[i] - kw[i]);
        return s;
    }
    std::vector<double> gradient(const std::vector<double>& kw) const {
        std::vector<double> g(pot.size());
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = pot[i] - 2.0 * kw[i];
        return g;
    }
};

DiscreteProblem make_problem(const Potential& v, double a, double b, int n_cells) {
    DiscreteProblem p;
    p.h = (b - a) / n_cells;
    p.nodes.resize(n_cells);
    p.pot.resize(n_cells);
    for (int i = 0; i < n_cells; ++i) {
        p.nodes[i] = a + (i + 0.5) * p.h;
        p.pot[i] = v.eval(p.nodes[i]);
    }
    p.kernel = build_kernel(p.nodes, p.h);
    return p;
}

// Projected gradient with Barzilai-Borwein steps and an Armijo safeguard.
std::vector<double> minimize(const DiscreteProblem& p, std::vector<double> w, int max_iter,
                             double pg_tol, int& iters_out, double& pg_out) {
    project_simplex(w);
    std::vector<double> kw = matvec(p.kernel, w);
    std::vector<double> g = p.gradient(kw);
    double e = p.energy(w, kw);
    double step = 1e-3;
    const std::size_t n = w.size();

    for (int it = 0; it < max_iter; ++it) {
        // reference projected gradient (unit step)
        std::vector<double> ref = w;
        for (std::size_t i = 0; i < n; ++i) ref[i] -= g[i];
        project_simplex(ref);
        double pg = 0.0;
        for (std::size_t i = 0; i < n; ++i) pg += (w[i] - ref[i]) * (w[i] - ref[i]);
        pg = std::sqrt(pg);
        pg_out = pg;
        iters_out = it;
        if (pg < pg_tol) return w;

        std::vector<double> wn(n), kwn, gn;
        double en = 0.0;
        double s = step;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t i = 0; i < n; ++i) wn[i] = w[i] - s * g[i];
            project_simplex(wn);
            kwn = matvec(p.kernel, wn);
            en = p.energy(wn, kwn);
            double lin = 0.0;
            for (std::size_t i = 0; i < n; ++i) lin += g[i] * (wn[i] - w[i]);
            if (en <= e + 1e-4 * lin || lin >= 0.0) break;
            s *= 0.5;
        }
        gn = p.gradient(kwn);
        // BB1 step from the accepted pair
        double ss = 0.0, sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ds = wn[i] - w[i], dy = gn[i] - g[i];
            ss += ds * ds;
            sy += ds * dy;
        }
        step = (sy > 1e-30 && std::isfinite(ss / sy)) ? std::clamp(ss / sy, 1e-12, 1e3) : s;
        w.swap(wn);
        g.swap(gn);
        e = en;
    }
    iters_out = max_iter;
    return w;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

constexpr double kSupportThreshold = 1e-8;

}  // namespace

Potential Potential::polynomial(const std::vector<double>& coeffs) {
    if (coeffs.size() < 3 || coeffs.back() <= 0.0 || coeffs.size() % 2 == 0)
        throw std::invalid_argument(
            "potential: even degree >= 2 with positive leading coefficient required");
    Potential p;
    p.eval = [coeffs](double x) {
        double s = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
        return s;
    };
    const int degree = static_cast<int>(coeffs.size()) - 1;
    double a = degree == 2 ? coeffs.back() : std::min(1.0, p.eval(50.0) / 2500.0);
    certify_growth(p.eval, a, p);
    return p;
}

Potential Potential::double_well(double a1, double a2) {
    if (a1 >= a2) throw std::invalid_argument("potential: a1 < a2 required");
    Potential p;
    p.eval = [a1, a2](double x) {
        return 0.5 * std::min((x - a1) * (x - a1), (x - a2) * (x - a2));
    };
    certify_growth(p.eval, 0.5, p);
    return p;
}

double EquilibriumResult::effective_potential(double x) const {
    const double h = measure.cell_width;
    double s = 0.0;
    for (std::size_t j = 0; j < measure.nodes.size(); ++j) {
        if (measure.weights[j] == 0.0) continue;
        double d = std::abs(x - measure.nodes[j]);
        double k = (h > 0.0 && d <= 8.0 * h) ? point_cell_log(x, measure.nodes[j], h)
                                             : std::log(d);
        s += measure.weights[j] * k;
    }
    return 2.0 * s + robin_constant;
}

EquilibriumResult solve_equilibrium(const Potential& v, double a, double b, int n_cells) {
    if (n_cells < 2) throw std::invalid_argument("solve_equilibrium: n_cells >= 2");
    if (b <= a) throw std::invalid_argument("solve_equilibrium: empty interval");

    // coarse-to-fine warm start
    std::vector<double> w0;
    if (n_cells >= 256 && n_cells % 2 == 0) {
        EquilibriumResult coarse = solve_equilibrium(v, a, b, n_cells / 2);
        w0.resize(n_cells);
        for (int i = 0; i < n_cells / 2; ++i)
            w0[2 * i] = w0[2 * i + 1] = 0.5 * coarse.measure.weights[i];
    } else {
        w0.assign(n_cells, 1.0 / n_cells);
    }

    DiscreteProblem p = make_problem(v, a, b, n_cells);
    int iters = 0;
    double pg = 0.0;
    std::vector<double> w = minimize(p, std::move(w0), 50000, 1e-8, iters, pg);

    std::vector<double> kw = matvec(p.kernel, w);
    std::vector<double> kv_samples;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > 1e-3 / n_cells) kv_samples.push_back(p.pot[i] - 2.0 * kw[i]);
    const double kv = kv_samples.empty() ? 0.0 : median(std::move(kv_samples));

    double s_lo = b, s_hi = a, res = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        double u = 2.0 * kw[i] + kv;
        if (w[i] > kSupportThreshold) {
            s_lo = std::min(s_lo, p.nodes[i] - 0.5 * p.h);
            s_hi = std::max(s_hi, p.nodes[i] + 0.5 * p.h);
            res = std::max(res, std::abs(p.pot[i] - u));
        } else {
            res = std::max(res, std::max(0.0, u - p.pot[i]));
        }
    }

    if (iters >= 50000)
        throw std::runtime_error("solve_equilibrium: no convergence after 50000 iterations"
                                 "; projected-gradient norm " + std::to_string(pg) +
                                 ", Euler-Lagrange residual " + std::to_string(res));

    EquilibriumResult out;
    // renormalize projection dust before constructing the measure
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    out.measure = GridMeasure(std::move(p.nodes), std::move(w), a, b, p.h);
    out.robin_constant = kv;
    out.support_lo = s_lo;
    out.support_hi = s_hi;
    out.residual = res;
    out.iterations = iters;
    return out;
}

EquilibriumResult solve_equilibrium(const Potential& v, int n_cells) {
    const double r = 2.0 * v.B + 4.0;
    return solve_equilibrium(v, -r, r, n_cells);
}

double euler_lagrange_residual(const EquilibriumResult& eq, const Potential& v) {
    const auto& m = eq.measure;
    if (m.atomic()) throw std::invalid_argument("euler_lagrange_residual: cell measure required");
    const std::vector<double> kernel = build_kernel(m.nodes, m.cell_width);
    const std::vector<double> kw = matvec(kernel, m.weights);
    double res = 0.0;
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        double u = 2.0 * kw[i] + eq.robin_constant;
        double pot = v.eval(m.nodes[i]);
        if (m.weights[i] > kSupportThreshold)
            res = std::max(res, std::abs(pot - u));
        else
            res = std::max(res, std::max(0.0, u - pot));
    }
    return res;
}

double energy_ev(const GridMeasure& mu, const Potential& v) {
    double lin = 0.0;
    for (std::size_t i = 0; i < mu.nodes.size(); ++i)
        lin += mu.weights[i] * v.eval(mu.nodes[i]);
    return lin - log_cross_energy(mu, mu);
}

CompressionMap::CompressionMap(double L_) : L(L_) {
    if (L < std::pow(3.0, 0.25) - 1e-12)
        throw std::invalid_argument("compression_map: L >= 3^(1/4) required");
}

double CompressionMap::operator()(double x) const {
    const double limit = std::sqrt(3.0) * L;
    if (std::abs(x) >= limit) throw std::domain_error("compression_map: |x| >= sqrt(3) L");
    if (std::abs(x) <= L) return x;
    double v = 2.0 * L * L * L / (3.0 * L * L - x * x);
    return x > 0.0 ? v : -v;
}

double CompressionMap::derivative(double x) const {
    const double limit = std::sqrt(3.0) * L;
    if (std::abs(x) >= limit) throw std::domain_error("compression_map: |x| >= sqrt(3) L");
    if (std::abs(x) <= L) return 1.0;
    double d = 3.0 * L * L - x * x;
    return 4.0 * L * L * L * std::abs(x) / (d * d);
}

CompressionMap compression_map(double L) { return CompressionMap(L); }

std::vector<std::pair<std::string, GridMeasure>> standard_test_family(
    const EquilibriumResult& eq) {
    std::vector<std::pair<std::string, GridMeasure>> out;
    const GridMeasure& m = eq.measure;
    out.emplace_back("translate_0.2", m.affine(1.0, 0.2));
    out.emplace_back("translate_0.5", m.affine(1.0, 0.5));
    out.emplace_back("translate_1.0", m.affine(1.0, 1.0));
    out.emplace_back("dilate_1.2", m.affine(1.2, 0.0));
    out.emplace_back("dilate_0.8", m.affine(0.8, 0.0));

    // on-grid mixture with a 50-cell shift of the weights
    {
        const std::size_t shift = std::min<std::size_t>(50, m.nodes.size() / 4);
        std::vector<double> w(m.weights.size(), 0.0);
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] += 0.5 * m.weights[i];
            std::size_t j = std::min(i + shift, w.size() - 1);
            w[j] += 0.5 * m.weights[i];
        }
        out.emplace_back("mixture_shift",
                         GridMeasure(m.nodes, std::move(w), m.a, m.b, m.cell_width));
    }

    out.emplace_back("arcsine_grid", grid_from_density(BetaDensity::arcsine(), 2000));
    out.emplace_back("semicircle_half",
                     grid_from_density(BetaDensity::semicircle(), 2000).affine(0.5, 0.3));
    out.emplace_back("equilibrium_itself", m);

    // single atom: exercises the infinite-energy skip path
    out.emplace_back("atom", GridMeasure({0.0}, {1.0}, -1.0, 1.0, 0.0));
    return out;
}

TransportCheckReport global_transport_check(
    const Potential& v, const EquilibriumResult& eq,
    const std::vector<std::pair<std::string, GridMeasure>>& test_measures) {
    TransportCheckReport rep;
    const double radius = std::max(std::abs(eq.support_lo), std::abs(eq.support_hi));
    rep.A = v.A;
    rep.L = std::max({v.B, 2.0 * radius, std::pow(3.0, 0.25)});
    auto constant_at = [&](double l) { return 2.0 * v.A / (12.0 * v.A * l * l + 9.0); };
    rep.constant = constant_at(rep.L);
    for (double f : {1.0, 1.5, 2.0})
        rep.l_sensitivity.emplace_back(f * rep.L, constant_at(f * rep.L));

    auto v_minus_u = [&](double x) { return v.eval(x) - eq.effective_potential(x); };
    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& [label, mu] : test_measures) {
        TransportCheckEntry e;
        e.label = label;
        if (mu.atomic()) {
            e.skipped = true;
            e.note = "atomic measure: logarithmic energy is infinite";
            rep.entries.push_back(std::move(e));
            continue;
        }
        e.w1 = wasserstein_p(mu, eq.measure, 1.0);
        if (e.w1 < 1e-9) {
            e.skipped = true;
            e.note = "coincides with the equilibrium measure (0/0 ratio)";
            rep.entries.push_back(std::move(e));
            continue;
        }
        FunctionalValue ev = relative_entropy_ev(mu, eq.measure, v_minus_u);
        e.rel_entropy = ev.value;
        e.ratio = ev.value / (e.w1 * e.w1);
        min_ratio = std::min(min_ratio, e.ratio);
        rep.entries.push_back(std::move(e));
    }
    rep.min_ratio = min_ratio;
    rep.passed = std::isfinite(min_ratio) && min_ratio >= rep.constant;
    return rep;
}

DoubleWellReport double_well_demo(double a1, double a2) {
    if (a2 - a1 <= 4.0)
        throw std::invalid_argument("double_well_demo: wells must be > 4 apart");
    DoubleWellReport rep;
    rep.a1 = a1;
    rep.a2 = a2;

    const SecondKindSeries hs = hilbert(BetaDensity::semicircle());
    // In the local coordinate t = x - a_i the well is [-2,2], V'(x) = t, and
    // the translated semicircle transforms to H(alpha)(t); the residual is
    // identical in both wells.
    auto well_residual = [&] {
        double worst = 0.0;
        for (int i = 0; i <= 200; ++i) {
            double t = -2.0 + 4.0 * i / 200.0;
            double h = hs.eval(t, /*allow_endpoint=*/true);
            worst = std::max(worst, std::abs(h - t));
        }
        return worst;
    };
    rep.h_residual_1 = well_residual();
    rep.h_residual_2 = well_residual();

    auto fisher_in_well = [&]() {
        const QuadratureRule rule = QuadratureRule::alpha(64);
        double s = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k) {
            double d = hs.eval(rule.nodes[k]) - rule.nodes[k];
            s += rule.weights[k] * d * d;
        }
        return s;
    };
    rep.fisher_mu1 = fisher_in_well();
    rep.fisher_mu2 = fisher_in_well();

    const GridMeasure sc = grid_from_density(BetaDensity::semicircle(), 400);
    rep.w1_between = wasserstein_p(sc.affine(1.0, a1), sc.affine(1.0, a2), 1.0);
    return rep;
}

}  // namespace freeineq
