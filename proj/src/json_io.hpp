#pragma once

#include <string>
#include <variant>

#include "equilibrium.hpp"
#include "measure.hpp"

namespace freeineq {

/// Either a spectral density on [-2,2] or a discrete measure.
using ParsedMeasure = std::variant<BetaDensity, GridMeasure>;

/// Parse a measure spec:
///   {"kind":"cheb","coeffs":[...]}
///   {"kind":"grid","nodes":[...],"weights":[...],"interval":[a,b]}
///   {"kind":"samples","points":[...]}
/// Throws std::invalid_argument with a message on malformed input.
ParsedMeasure parse_measure(const std::string& json_text);
ParsedMeasure parse_measure_file(const std::string& path);

/// Parsed potential plus the raw kind (the CLI dispatches on double_well).
struct ParsedPotential {
    Potential potential;
    std::string kind;
    double a1 = 0.0;  // double_well only
    double a2 = 0.0;
};

/// Parse a potential spec:
///   {"kind":"poly","coeffs":[c0,c1,...]}
///   {"kind":"double_well","a1":...,"a2":...}
ParsedPotential parse_potential(const std::string& json_text);
ParsedPotential parse_potential_file(const std::string& path);

}  // namespace freeineq
