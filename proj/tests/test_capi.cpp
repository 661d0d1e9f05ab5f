#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "freeineq.h"

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const char* name) {
    return std::string("capi_") + name;  // test working directory
}
}  // namespace

TEST_CASE("measure parsing and error reporting") {
    fi_measure* m = nullptr;
    CHECK(fi_measure_parse("{\"kind\":\"cheb\",\"coeffs\":[1,0.5]}", &m) == FI_OK);
    fi_measure_free(m);
    m = nullptr;
    CHECK(fi_measure_parse("{\"kind\":\"nope\"}", &m) == FI_ERR_INPUT);
    CHECK(std::string(fi_last_error()).find("kind") != std::string::npos);
    CHECK(fi_measure_parse("not json", &m) == FI_ERR_INPUT);
    CHECK(fi_measure_parse(nullptr, &m) == FI_ERR_INPUT);
    // negative density rejected
    CHECK(fi_measure_parse("{\"kind\":\"cheb\",\"coeffs\":[1,9]}", &m) == FI_ERR_INPUT);
    // grid and samples kinds
    CHECK(fi_measure_parse("{\"kind\":\"grid\",\"nodes\":[0,1],\"weights\":[0.5,0.5],"
                           "\"interval\":[0,1]}", &m) == FI_OK);
    fi_measure_free(m);
    CHECK(fi_measure_parse("{\"kind\":\"samples\",\"points\":[0.5,-0.5,0.5]}", &m) == FI_OK);
    fi_measure_free(m);
}

TEST_CASE("functionals report: spectral pair") {
    fi_measure *a = nullptr, *b = nullptr;
    REQUIRE(fi_measure_parse("{\"kind\":\"cheb\",\"coeffs\":[1,0.6]}", &a) == FI_OK);
    REQUIRE(fi_measure_parse("{\"kind\":\"cheb\",\"coeffs\":[1]}", &b) == FI_OK);
    char* json = nullptr;
    CHECK(fi_functionals_report(a, b, 1e-9, &json) == FI_OK);
    std::string s(json);
    fi_string_free(json);
    CHECK(s.find("\"W1\":0.59999999") != std::string::npos);
    CHECK(s.find("\"H\":0.17999999") != std::string::npos);
    CHECK(s.find("\"slack_lsi\":0") != std::string::npos);
    // identical measures: zero everything
    json = nullptr;
    CHECK(fi_functionals_report(a, a, 1e-9, &json) == FI_OK);
    std::string z(json);
    fi_string_free(json);
    CHECK(z.find("\"W1\":0,") != std::string::npos);
    fi_measure_free(a);
    fi_measure_free(b);
}

TEST_CASE("functionals report: atomic measure serializes infinite entropy") {
    fi_measure *a = nullptr, *b = nullptr;
    REQUIRE(fi_measure_parse("{\"kind\":\"samples\",\"points\":[0.0]}", &a) == FI_OK);
    REQUIRE(fi_measure_parse("{\"kind\":\"cheb\",\"coeffs\":[1]}", &b) == FI_OK);
    char* json = nullptr;
    CHECK(fi_functionals_report(a, b, 1e-9, &json) == FI_OK);
    std::string s(json);
    fi_string_free(json);
    CHECK(s.find("\"H\":\"inf\"") != std::string::npos);
    fi_measure_free(a);
    fi_measure_free(b);
}

TEST_CASE("verify CSV is deterministic") {
    std::string p1 = tmp_path("v1.csv"), p2 = tmp_path("v2.csv");
    CHECK(fi_verify_csv(1, 10, 32, p1.c_str()) == FI_OK);
    CHECK(fi_verify_csv(1, 10, 32, p2.c_str()) == FI_OK);
    std::string c1 = slurp(p1), c2 = slurp(p2);
    CHECK(!c1.empty());
    CHECK(c1 == c2);  // byte-identical
    // header + 10 rows
    CHECK(std::count(c1.begin(), c1.end(), '\n') == 11);
    // n = 0: header only
    CHECK(fi_verify_csv(1, 0, 32, p1.c_str()) == FI_OK);
    CHECK(slurp(p1) == "sample_id,W1,H,I,J,slack_t,slack_lsi,slack_hwi\n");
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("lp sweep CSV") {
    std::string p = tmp_path("lp.csv");
    CHECK(fi_lp_sweep_csv(1.5, 0.9, 0.9999, 10, 1.0, p.c_str()) == FI_OK);
    std::string c = slurp(p);
    CHECK(c.rfind("r,n_terms,tail_bound,H,lp_alpha,lp_reduced,ratio\n", 0) == 0);
    CHECK(std::count(c.begin(), c.end(), '\n') == 13);  // header + 10 rows + 2 footers
    std::remove(p.c_str());
    // invalid range
    CHECK(fi_lp_sweep_csv(1.5, 0.9, 1.0, 10, 1.0, p.c_str()) == FI_ERR_INPUT);
    CHECK(fi_lp_sweep_csv(1.5, 0.9, 0.99, 0, 1.0, p.c_str()) == FI_ERR_INPUT);
}

TEST_CASE("equilibrium run: quadratic and double-well specs") {
    char* json = nullptr;
    std::string csv = tmp_path("density.csv");
    CHECK(fi_equilibrium_run("{\"kind\":\"poly\",\"coeffs\":[0,0,0.5]}", 512, csv.c_str(),
                             &json) == FI_OK);
    std::string s(json);
    fi_string_free(json);
    CHECK(s.find("\"robin_constant\":") != std::string::npos);
    CHECK(s.find("\"passed\":true") != std::string::npos);
    std::string density = slurp(csv);
    CHECK(density.rfind("node,weight\n", 0) == 0);
    CHECK(std::count(density.begin(), density.end(), '\n') == 513);
    std::remove(csv.c_str());

    json = nullptr;
    CHECK(fi_equilibrium_run("{\"kind\":\"double_well\",\"a1\":-3,\"a2\":3}", 512, nullptr,
                             &json) == FI_OK);
    std::string d(json);
    fi_string_free(json);
    auto pos = d.find("\"W1_between\":");
    REQUIRE(pos != std::string::npos);
    CHECK(std::strtod(d.c_str() + pos + 13, nullptr) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(d.find("\"h_residual_1\":") != std::string::npos);

    json = nullptr;
    CHECK(fi_equilibrium_run("{\"kind\":\"poly\",\"coeffs\":[0,1]}", 512, nullptr, &json) ==
          FI_ERR_INPUT);
}
