#include "freeineq.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "equilibrium.hpp"
#include "experiments.hpp"
#include "functionals.hpp"
#include "json_io.hpp"
#include "transport.hpp"

namespace {

thread_local std::string g_error;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
fi_status wrap(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return FI_ERR_INPUT;
    } catch (const std::domain_error& e) {
        g_error = e.what();
        return FI_ERR_INPUT;
    } catch (const std::exception& e) {
        g_error = e.what();
        return FI_ERR_INTERNAL;
    }
}

// value or quoted "inf"
std::string num_or_inf(double v, bool infinite) {
    return infinite ? std::string("\"inf\"") : fmt17(v);
}

}  // namespace

struct fi_measure {
    freeineq::ParsedMeasure value;
};

extern "C" {

const char* fi_last_error(void) { return g_error.c_str(); }

void fi_string_free(char* s) { std::free(s); }

fi_status fi_measure_parse(const char* json_text, fi_measure** out) {
    if (!json_text || !out) {
        g_error = "null argument";
        return FI_ERR_INPUT;
    }
    return wrap([&] {
        *out = new fi_measure{freeineq::parse_measure(json_text)};
        return FI_OK;
    });
}

fi_status fi_measure_parse_file(const char* path, fi_measure** out) {
    if (!path || !out) {
        g_error = "null argument";
        return FI_ERR_INPUT;
    }
    return wrap([&] {
        *out = new fi_measure{freeineq::parse_measure_file(path)};
        return FI_OK;
    });
}

void fi_measure_free(fi_measure* m) { delete m; }

fi_status fi_functionals_report(const fi_measure* a, const fi_measure* b, double tolerance,
                                char** json_out) {
    if (!a || !b || !json_out) {
        g_error = "null argument";
        return FI_ERR_INPUT;
    }
    return wrap([&]() -> fi_status {
        using namespace freeineq;
        std::ostringstream os;
        bool violation = false;

        const auto* da = std::get_if<BetaDensity>(&a->value);
        const auto* db = std::get_if<BetaDensity>(&b->value);
        if (da && db) {
            double w1 = wasserstein_p(*da, *db, 1.0);
            double h = entropy_H(*da, *db).value;
            double i = fisher_I(*da, *db).value;
            double j = fisher_J(*da, *db).value;
            double tv = total_variation(*da, *db).value;
            double st = 2.0 * h - w1 * w1;
            double sl = j - 2.0 * h;
            double sh = std::sqrt(2.0 * i) * w1 - 0.5 * w1 * w1 - h;
            violation = st < -tolerance || sl < -tolerance || sh < -tolerance;
            os << "{\"W1\":" << fmt17(w1) << ",\"H\":" << fmt17(h) << ",\"I\":" << fmt17(i)
               << ",\"J\":" << fmt17(j) << ",\"TV\":" << fmt17(tv)
               << ",\"slack_transport\":" << fmt17(st) << ",\"slack_lsi\":" << fmt17(sl)
               << ",\"slack_hwi\":" << fmt17(sh) << "}";
        } else {
            // at least one discrete measure: only W1 and the logarithmic
            // energy H are defined; the density-level functionals are not.
            auto to_grid = [](const ParsedMeasure& m) {
                if (const auto* d = std::get_if<BetaDensity>(&m))
                    return grid_from_density(*d, 2000);
                return std::get<GridMeasure>(m);
            };
            GridMeasure ga = to_grid(a->value), gb = to_grid(b->value);
            double w1 = wasserstein_p(ga, gb, 1.0);
            FunctionalValue h = log_energy(ga, gb);
            os << "{\"W1\":" << fmt17(w1) << ",\"H\":" << num_or_inf(h.value, h.is_infinite)
               << ",\"I\":\"inf\",\"J\":\"inf\",\"TV\":\"inf\""
               << ",\"slack_transport\":"
               << (h.is_infinite ? std::string("\"inf\"") : fmt17(2.0 * h.value - w1 * w1))
               << ",\"slack_lsi\":\"inf\",\"slack_hwi\":\"inf\"}";
            if (!h.is_infinite) violation = 2.0 * h.value - w1 * w1 < -tolerance;
        }
        *json_out = dup_string(os.str());
        return violation ? FI_VIOLATION : FI_OK;
    });
}

fi_status fi_verify_csv(uint64_t seed, int n_samples, int max_degree, const char* out_path) {
    if (!out_path || n_samples < 0 || max_degree < 1) {
        g_error = "bad argument";
        return FI_ERR_INPUT;
    }
    return wrap([&]() -> fi_status {
        freeineq::VerifyReport rep =
            freeineq::verify_inequalities(seed, n_samples, max_degree);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            g_error = std::string("cannot open ") + out_path;
            return FI_ERR_INPUT;
        }
        freeineq::write_verify_csv(out, rep);
        return rep.violations > 0 ? FI_VIOLATION : FI_OK;
    });
}

fi_status fi_lp_sweep_csv(double p, double r_min, double r_max, int steps, double eta,
                          const char* out_path) {
    if (!out_path || steps < 1 || !(r_min > 0.0) || !(r_max < 1.0) || r_min > r_max) {
        g_error = "bad argument: need 0 < r_min <= r_max < 1 and steps >= 1";
        return FI_ERR_INPUT;
    }
    return wrap([&]() -> fi_status {
        std::vector<double> rs;
        if (steps == 1) {
            rs.push_back(r_min);
        } else {
            // uniform in -log(1-r)
            double x0 = -std::log(1.0 - r_min), x1 = -std::log(1.0 - r_max);
            for (int i = 0; i < steps; ++i)
                rs.push_back(1.0 - std::exp(-(x0 + (x1 - x0) * i / (steps - 1))));
        }
        auto rows = freeineq::lp_explorer(p, rs, eta);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            g_error = std::string("cannot open ") + out_path;
            return FI_ERR_INPUT;
        }
        freeineq::write_lp_csv(out, rows, p, eta);
        return FI_OK;
    });
}

fi_status fi_equilibrium_run(const char* potential_json, int n_cells,
                             const char* density_csv_path, char** json_out) {
    if (!potential_json || !json_out || n_cells < 2) {
        g_error = "bad argument";
        return FI_ERR_INPUT;
    }
    return wrap([&]() -> fi_status {
        using namespace freeineq;
        ParsedPotential pp = parse_potential(potential_json);
        std::ostringstream os;

        if (pp.kind == "double_well") {
            DoubleWellReport rep = double_well_demo(pp.a1, pp.a2);
            os << "{\"kind\":\"double_well\",\"a1\":" << fmt17(rep.a1)
               << ",\"a2\":" << fmt17(rep.a2)
               << ",\"h_residual_1\":" << fmt17(rep.h_residual_1)
               << ",\"h_residual_2\":" << fmt17(rep.h_residual_2)
               << ",\"fisher_mu1\":" << fmt17(rep.fisher_mu1)
               << ",\"fisher_mu2\":" << fmt17(rep.fisher_mu2)
               << ",\"W1_between\":" << fmt17(rep.w1_between) << "}";
            *json_out = dup_string(os.str());
            return FI_OK;
        }

        EquilibriumResult eq = solve_equilibrium(pp.potential, n_cells);
        double residual = euler_lagrange_residual(eq, pp.potential);
        TransportCheckReport check =
            global_transport_check(pp.potential, eq, standard_test_family(eq));

        if (density_csv_path) {
            std::ofstream csv(density_csv_path, std::ios::binary);
            if (!csv) {
                g_error = std::string("cannot open ") + density_csv_path;
                return FI_ERR_INPUT;
            }
            csv << "node,weight\n";
            for (std::size_t i = 0; i < eq.measure.nodes.size(); ++i)
                csv << fmt17(eq.measure.nodes[i]) << ',' << fmt17(eq.measure.weights[i])
                    << '\n';
        }

        os << "{\"kind\":\"poly\",\"robin_constant\":" << fmt17(eq.robin_constant)
           << ",\"residual\":" << fmt17(residual) << ",\"support\":["
           << fmt17(eq.support_lo) << ',' << fmt17(eq.support_hi)
           << "],\"iterations\":" << eq.iterations << ",\"transport_check\":{\"A\":"
           << fmt17(check.A) << ",\"L\":" << fmt17(check.L)
           << ",\"constant\":" << fmt17(check.constant)
           << ",\"min_ratio\":" << fmt17(check.min_ratio)
           << ",\"passed\":" << (check.passed ? "true" : "false") << ",\"entries\":[";
        for (std::size_t i = 0; i < check.entries.size(); ++i) {
            const auto& e = check.entries[i];
            if (i) os << ',';
            os << "{\"label\":\"" << e.label << "\"";
            if (e.skipped)
                os << ",\"skipped\":true,\"note\":\"" << e.note << "\"}";
            else
                os << ",\"W1\":" << fmt17(e.w1) << ",\"rel_entropy\":" << fmt17(e.rel_entropy)
                   << ",\"ratio\":" << fmt17(e.ratio) << "}";
        }
        os << "]}}";
        *json_out = dup_string(os.str());
        return check.passed ? FI_OK : FI_VIOLATION;
    });
}

}  // extern "C"
