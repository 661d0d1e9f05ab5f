// Command-line front end; all computation goes through the shared C API.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeineq.h"

namespace {

int status_to_exit(fi_status s) {
    switch (s) {
        case FI_OK: return 0;
        case FI_VIOLATION: return 2;
        default: return 1;
    }
}

void report_error(fi_status s) {
    if (s != FI_OK && s != FI_VIOLATION) std::cerr << "error: " << fi_last_error() << '\n';
}

// Defaults from the file named by FREEINEQ_CONFIG (flags take precedence).
nlohmann::json load_config() {
    const char* path = std::getenv("FREEINEQ_CONFIG");
    if (!path) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) return nlohmann::json::object();
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    return j.is_object() ? j : nlohmann::json::object();
}

template <typename T>
T cfg(const nlohmann::json& c, const char* key, T fallback) {
    return c.contains(key) ? c[key].get<T>() : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral functionals, transportation/LSI/HWI verification, and "
                 "equilibrium measures for probability measures on compact intervals"};
    app.require_subcommand(1);
    const nlohmann::json config = load_config();

    // functionals
    std::string measure_a, measure_b;
    double tolerance = cfg(config, "tolerance", 1e-9);
    auto* fcmd = app.add_subcommand("functionals",
                                    "W1, H, I, J, TV and inequality slacks for a measure pair "
                                    "(JSON to stdout)");
    fcmd->add_option("measure_a", measure_a, "measure spec file")->required();
    fcmd->add_option("measure_b", measure_b, "measure spec file")->required();
    fcmd->add_option("--tolerance", tolerance, "slack tolerance for the violation exit code");

    // verify
    std::uint64_t seed = cfg(config, "seed", std::uint64_t{42});
    int samples = cfg(config, "samples", 1000);
    int degree = cfg(config, "degree", 32);
    int jobs = cfg(config, "jobs", 1);
    std::string out = cfg(config, "out", std::string{});
    auto* vcmd = app.add_subcommand("verify",
                                    "seeded random-pair inequality sweep, CSV output");
    vcmd->add_option("--seed", seed, "RNG seed");
    vcmd->add_option("--samples", samples, "number of random pairs");
    vcmd->add_option("--degree", degree, "maximum density degree");
    vcmd->add_option("--jobs", jobs,
                     "accepted for compatibility; evaluation is serial and deterministic");
    vcmd->add_option("--out", out, "output CSV path")->required();

    // lp-sweep
    double p = 1.5, r_min = 0.9, r_max = 0.9999, eta = 1.0;
    int steps = 10;
    std::string lp_out;
    auto* lcmd = app.add_subcommand("lp-sweep",
                                    "geometric-family L^p information sweep, CSV output");
    lcmd->add_option("--p", p, "exponent p >= 1");
    lcmd->add_option("--r-min", r_min, "smallest r in (0,1)");
    lcmd->add_option("--r-max", r_max, "largest r in (0,1)");
    lcmd->add_option("--steps", steps, "number of r values");
    lcmd->add_option("--eta", eta, "family amplitude");
    lcmd->add_option("--jobs", jobs,
                     "accepted for compatibility; evaluation is serial and deterministic");
    lcmd->add_option("--out", lp_out, "output CSV path")->required();

    // equilibrium
    std::string potential_path, density_out;
    int cells = cfg(config, "cells", 2000);
    auto* ecmd = app.add_subcommand("equilibrium",
                                    "equilibrium measure, Euler-Lagrange and global "
                                    "transportation checks (JSON to stdout)");
    ecmd->add_option("potential", potential_path, "potential spec file")->required();
    ecmd->add_option("--cells", cells, "grid cells");
    ecmd->add_option("--out", density_out, "density CSV path (optional)");

    CLI11_PARSE(app, argc, argv);

    if (fcmd->parsed()) {
        fi_measure *ma = nullptr, *mb = nullptr;
        fi_status s = fi_measure_parse_file(measure_a.c_str(), &ma);
        if (s == FI_OK) s = fi_measure_parse_file(measure_b.c_str(), &mb);
        char* json = nullptr;
        if (s == FI_OK || s == FI_VIOLATION)
            s = fi_functionals_report(ma, mb, tolerance, &json);
        if (json) {
            std::cout << json << '\n';
            fi_string_free(json);
        }
        fi_measure_free(ma);
        fi_measure_free(mb);
        report_error(s);
        return status_to_exit(s);
    }
    if (vcmd->parsed()) {
        fi_status s = fi_verify_csv(seed, samples, degree, out.c_str());
        report_error(s);
        return status_to_exit(s);
    }
    if (lcmd->parsed()) {
        fi_status s = fi_lp_sweep_csv(p, r_min, r_max, steps, eta, lp_out.c_str());
        report_error(s);
        return status_to_exit(s);
    }
    if (ecmd->parsed()) {
        std::ifstream in(potential_path);
        if (!in) {
            std::cerr << "error: cannot open " << potential_path << '\n';
            return 1;
        }
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        char* json = nullptr;
        fi_status s = fi_equilibrium_run(text.c_str(), cells,
                                         density_out.empty() ? nullptr : density_out.c_str(),
                                         &json);
        if (json) {
            std::cout << json << '\n';
            fi_string_free(json);
        }
        report_error(s);
        return status_to_exit(s);
    }
    return 1;
}
