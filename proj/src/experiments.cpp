#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "quadrature.hpp"
#include "transport.hpp"

namespace freeineq {

namespace {
constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// mu with density 1 + 2c phi_1 against the arcsine law: the equality family
// mu(dx) - nu(dx) = c x beta(dx).
std::pair<BetaDensity, BetaDensity> sharpness_pair(double c) {
    return {BetaDensity(ChebSeries({1.0, 2.0 * c})), BetaDensity::arcsine()};
}
}  // namespace

VerifyReport verify_inequalities(std::uint64_t seed, int n_samples, int max_degree) {
    if (n_samples < 0) throw std::invalid_argument("verify_inequalities: n_samples >= 0");
    if (max_degree < 1) throw std::invalid_argument("verify_inequalities: max_degree >= 1");
    VerifyReport rep;
    rep.seed = seed;
    Rng rng(seed);
    for (int id = 0; id < n_samples; ++id) {
        int deg = 1 + static_cast<int>(rng.uniform() * max_degree);
        BetaDensity mu = random_beta_density(rng, deg, 0.6);
        BetaDensity nu = random_beta_density(rng, deg, 0.6);
        VerifyRow row;
        row.sample_id = id;
        row.w1 = wasserstein_p(mu, nu, 1.0);
        row.h = entropy_H(mu, nu).value;
        row.i = fisher_I(mu, nu).value;
        row.j = fisher_J(mu, nu).value;
        row.slack_transport = 2.0 * row.h - row.w1 * row.w1;
        row.slack_lsi = row.j - 2.0 * row.h;
        row.slack_hwi = std::sqrt(2.0 * row.i) * row.w1 - 0.5 * row.w1 * row.w1 - row.h;
        row.violation = row.slack_transport < -1e-9 || row.slack_lsi < -1e-9 ||
                        row.slack_hwi < -1e-9;
        if (row.violation) ++rep.violations;
        rep.rows.push_back(row);
    }
    for (double c : {0.1, 0.3, 0.5}) {
        auto [mu, nu] = sharpness_pair(c);
        double w1 = wasserstein_p(mu, nu, 1.0);
        double h = entropy_H(mu, nu).value;
        double i = fisher_I(mu, nu).value;
        double j = fisher_J(mu, nu).value;
        SharpnessRow s;
        s.c = c;
        s.abs_slack_transport = std::abs(2.0 * h - w1 * w1);
        s.abs_slack_lsi = std::abs(j - 2.0 * h);
        s.abs_slack_hwi = std::abs(std::sqrt(2.0 * i) * w1 - 0.5 * w1 * w1 - h);
        rep.sharpness.push_back(s);
    }
    return rep;
}

FunctionalValue hwi_slack(const BetaDensity& mu, const BetaDensity& nu) {
    FunctionalValue i = fisher_I(mu, nu);
    if (i.is_infinite) return FunctionalValue::infinite();
    double w1 = wasserstein_p(mu, nu, 1.0);
    double h = entropy_H(mu, nu).value;
    return FunctionalValue::finite(std::sqrt(2.0 * i.value) * w1 - 0.5 * w1 * w1 - h,
                                   FunctionalValue::Method::quadrature);
}

std::vector<PinskerRow> pinsker_failure_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("pinsker_failure_table: n_max >= 1");
    std::vector<PinskerRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<double> g(n + 1, 0.0);
        g[n] = 1.0;
        SignedDifference diff{ChebSeries(std::move(g))};
        PinskerRow row;
        row.n = n;
        row.tv = total_variation(diff).value;
        row.h = entropy_H(diff).value;
        row.ratio = row.h / (row.tv * row.tv);
        rows.push_back(row);
    }
    return rows;
}

std::vector<LinearizationRow> wp_linearization_sweep(double p,
                                                     const std::vector<double>& floor_values) {
    if (p <= 1.0) throw std::invalid_argument("wp_linearization_sweep: p > 1 required");
    for (double d : floor_values)
        if (d <= 0.0 || d >= 1.0)
            throw std::invalid_argument("wp_linearization_sweep: floors must lie in (0,1)");

    std::vector<LinearizationRow> rows;
    for (double delta : floor_values) {
        // base density delta + s (x/2)^16, unit mass; floor exactly delta in the
        // middle of the interval, where the perturbation displaces the most mass
        const double moment = project([](double x) { return std::pow(0.5 * x, 16.0); }, 16)
                                  .coeffs[0];
        const double s = (1.0 - delta) / moment;
        ChebSeries base = project(
            [&](double x) { return delta + s * std::pow(0.5 * x, 16.0); }, 16);
        base.coeffs[0] = 1.0;
        BetaDensity mu{base};

        // perturbation h(x) = x, i.e. 2 phi_1; its cumulative G(x) = -sqrt(4-x^2)/pi
        // peaks at x = 0 where the base sits at its floor, so the quantile shift
        // G/f ~ G/delta blows up as the floor shrinks.  The amplitude scales with
        // delta to stay inside the linearization regime (and keep nu >= 0).
        const double eps = 0.01 * delta;
        ChebSeries pert = base;
        pert.coeffs[1] += 2.0 * eps;
        BetaDensity nu{pert};

        double h = entropy_H(mu, nu).value;
        double wp = wasserstein_p(mu, nu, p);
        double w1 = wasserstein_p(mu, nu, 1.0);
        rows.push_back({delta, wp * wp / h, w1 * w1 / h});
    }
    return rows;
}

std::vector<LpRow> lp_explorer(double p, const std::vector<double>& r_values, double eta) {
    if (p < 1.0) throw std::invalid_argument("lp_explorer: p >= 1 required");
    std::vector<LpRow> rows;
    for (double r : r_values) {
        if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("lp_explorer: r must be in (0,1)");
        LpRow row;
        row.r = r;
        row.n_terms = static_cast<std::size_t>(
            std::min(std::ceil(40.0 / (1.0 - r)), 1e6));
        double h = 0.0, rp = 1.0;  // rp = r^{2(n-1)}
        for (std::size_t n = 1; n <= row.n_terms; ++n) {
            h += eta * eta * rp / (2.0 * n);
            rp *= r * r;
        }
        row.h = h;
        row.tail_bound = eta * eta * rp /
                         (2.0 * static_cast<double>(row.n_terms + 1) * (1.0 - r * r));

        // |H(mu-nu)|(x) = eta/(1 - r x + r^2); substitute x = 2 - 4u so that
        // d(alpha) = (8/pi) sqrt(u(1-u)) du and the denominator becomes
        // (1-r)^2 + 4ru, a spike at u = 0 resolved by graded panels.
        auto f = [&](double u) {
            double den = (1.0 - r) * (1.0 - r) + 4.0 * r * u;
            return std::sqrt(std::max(0.0, u * (1.0 - u))) / std::pow(den, p);
        };
        double u_int = graded_gl(f, 0.0, 0.5, 100) +
                       graded_gl([&](double u) { return f(1.5 - u); }, 0.5, 1.0, 40);
        row.lp_alpha = (8.0 / kPi) * std::pow(eta, p) * u_int;
        row.lp_reduced = u_int;
        row.ratio = row.h / std::pow(row.lp_alpha, 2.0 / p);
        rows.push_back(row);
    }
    return rows;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need >= 2 matching points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

double trig_ratio(const std::vector<double>& a, double p) {
    if (p < 1.0) throw std::invalid_argument("trig_ratio: p >= 1 required");
    double denom = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) denom += a[k] * a[k] / (k + 1.0);
    if (denom == 0.0) throw std::invalid_argument("trig_ratio: zero coefficient vector");
    auto f = [&](double t) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * std::sin((k + 1.0) * t);
        return s;
    };
    auto w = [&](double t) { return std::pow(std::sin(t), 2.0 - p); };
    int scan = std::max(2048, 64 * static_cast<int>(a.size() + 1));
    double num = integrate_abs_pow(f, w, p, 0.0, kPi, scan);
    return std::pow(num, 2.0 / p) / denom;
}

std::vector<FlowRow> semigroup_flow(const BetaDensity& mu, const BetaDensity& nu,
                                    const std::vector<double>& t_grid) {
    const SignedDifference diff = SignedDifference::between(mu, nu);
    const auto& g = diff.coeffs.coeffs;
    auto h_at = [&](double t) {
        double s = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n)
            s += g[n] * g[n] * std::exp(-2.0 * n * t) / (2.0 * n);
        return s;
    };
    auto i_at = [&](double t) {
        double s = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n)
            s += 0.5 * g[n] * g[n] * std::exp(-2.0 * n * t);
        return s;
    };
    std::vector<FlowRow> rows;
    constexpr double kDt = 1e-4;
    for (double t : t_grid) {
        if (t < 0.0) throw std::invalid_argument("semigroup_flow: t >= 0 required");
        FlowRow row;
        row.t = t;
        row.h = h_at(t);
        row.i = i_at(t);
        row.dh_dt = (h_at(t + kDt) - h_at(t - kDt)) / (2.0 * kDt);
        rows.push_back(row);
    }
    return rows;
}

void write_verify_csv(std::ostream& os, const VerifyReport& rep) {
    os << "sample_id,W1,H,I,J,slack_t,slack_lsi,slack_hwi\n";
    for (const auto& r : rep.rows) {
        os << r.sample_id << ',' << fmt17(r.w1) << ',' << fmt17(r.h) << ',' << fmt17(r.i)
           << ',' << fmt17(r.j) << ',' << fmt17(r.slack_transport) << ','
           << fmt17(r.slack_lsi) << ',' << fmt17(r.slack_hwi) << '\n';
    }
}

void write_lp_csv(std::ostream& os, const std::vector<LpRow>& rows, double p, double eta) {
    os << "r,n_terms,tail_bound,H,lp_alpha,lp_reduced,ratio\n";
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        os << fmt17(r.r) << ',' << r.n_terms << ',' << fmt17(r.tail_bound) << ','
           << fmt17(r.h) << ',' << fmt17(r.lp_alpha) << ',' << fmt17(r.lp_reduced) << ','
           << fmt17(r.ratio) << '\n';
        xs.push_back(-std::log(1.0 - r.r));
        ys.push_back(r.lp_reduced);
    }
    os << "# p=" << fmt17(p) << " eta=" << fmt17(eta) << '\n';
    if (rows.size() >= 2)
        os << "# slope_reduced_vs_neglog1mr=" << fmt17(fit_slope(xs, ys)) << '\n';
}

}  // namespace freeineq
