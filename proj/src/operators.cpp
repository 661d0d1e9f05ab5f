#include "operators.hpp"

#include <cmath>
#include <stdexcept>

namespace freeineq {

ChebSeries apply_E(const ChebSeries& f) {
    ChebSeries out = f;
    if (!out.coeffs.empty()) out.coeffs[0] = 0.0;
    for (std::size_t n = 1; n < out.coeffs.size(); ++n) out.coeffs[n] /= static_cast<double>(n);
    return out;
}

ChebSeries apply_N(const ChebSeries& f) {
    ChebSeries out = f;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) out.coeffs[n] *= static_cast<double>(n);
    return out;
}

ChebSeries apply_L(const ChebSeries& f) {
    ChebSeries out = f;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n)
        out.coeffs[n] *= static_cast<double>(n) * static_cast<double>(n);
    return out;
}

SecondKindSeries apply_U(const ChebSeries& f) {
    const int n = f.degree();
    std::vector<double> c(std::max(0, n), 0.0);
    for (int k = 1; k <= n; ++k) c[k - 1] = 0.5 * f.coeffs[k];
    return SecondKindSeries(std::move(c));
}

ChebSeries semigroup(const ChebSeries& f, double t) {
    if (t < 0.0) throw std::invalid_argument("semigroup: t must be >= 0");
    ChebSeries out = f;
    for (std::size_t n = 1; n < out.coeffs.size(); ++n)
        out.coeffs[n] *= std::exp(-t * static_cast<double>(n));
    return out;
}

SecondKindSeries hilbert(const ChebSeries& density) {
    const int n = density.degree();
    std::vector<double> c(std::max(0, n), 0.0);
    for (int k = 1; k <= n; ++k) c[k - 1] = -density.coeffs[k];
    return SecondKindSeries(std::move(c));
}

SecondKindSeries hilbert(const BetaDensity& mu) { return hilbert(mu.density()); }

SecondKindSeries hilbert(const SignedDifference& diff) { return hilbert(diff.coeffs); }

}  // namespace freeineq
