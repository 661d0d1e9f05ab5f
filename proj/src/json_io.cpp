#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace freeineq {

namespace {
using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw std::invalid_argument("spec: not valid JSON");
    return j;
}

std::vector<double> number_array(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw std::invalid_argument(std::string("spec: missing array field '") + field + "'");
    std::vector<double> out;
    for (const auto& v : j[field]) {
        if (!v.is_number())
            throw std::invalid_argument(std::string("spec: non-numeric entry in '") + field + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("spec: cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GridMeasure from_samples(std::vector<double> points) {
    if (points.empty()) throw std::invalid_argument("spec: empty sample list");
    std::sort(points.begin(), points.end());
    // merge duplicates into single atoms
    std::vector<double> nodes, weights;
    const double w = 1.0 / points.size();
    for (double x : points) {
        if (!nodes.empty() && x == nodes.back())
            weights.back() += w;
        else {
            nodes.push_back(x);
            weights.push_back(w);
        }
    }
    const double a = nodes.front(), b = nodes.back();
    return GridMeasure(std::move(nodes), std::move(weights), a, b, 0.0);
}
}  // namespace

ParsedMeasure parse_measure(const std::string& json_text) {
    json j = parse_json(json_text);
    const std::string kind = j.value("kind", "");
    if (kind == "cheb") {
        return BetaDensity(ChebSeries(number_array(j, "coeffs")));
    }
    if (kind == "grid") {
        std::vector<double> interval = number_array(j, "interval");
        if (interval.size() != 2)
            throw std::invalid_argument("spec: interval must be [a,b]");
        return GridMeasure(number_array(j, "nodes"), number_array(j, "weights"), interval[0],
                           interval[1], 0.0);
    }
    if (kind == "samples") {
        return from_samples(number_array(j, "points"));
    }
    throw std::invalid_argument("spec: kind must be cheb, grid, or samples");
}

ParsedMeasure parse_measure_file(const std::string& path) {
    return parse_measure(read_file(path));
}

ParsedPotential parse_potential(const std::string& json_text) {
    json j = parse_json(json_text);
    const std::string kind = j.value("kind", "");
    ParsedPotential out;
    out.kind = kind;
    if (kind == "poly") {
        out.potential = Potential::polynomial(number_array(j, "coeffs"));
        return out;
    }
    if (kind == "double_well") {
        if (!j.contains("a1") || !j.contains("a2") || !j["a1"].is_number() ||
            !j["a2"].is_number())
            throw std::invalid_argument("spec: double_well needs numeric a1, a2");
        out.a1 = j["a1"].get<double>();
        out.a2 = j["a2"].get<double>();
        out.potential = Potential::double_well(out.a1, out.a2);
        return out;
    }
    throw std::invalid_argument("spec: kind must be poly or double_well");
}

ParsedPotential parse_potential_file(const std::string& path) {
    return parse_potential(read_file(path));
}

}  // namespace freeineq
