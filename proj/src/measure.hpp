#pragma once

#include <cstdint>
#include <vector>

#include "cheb.hpp"

namespace freeineq {

/// Probability measure mu = phi d(beta) on [-2,2], phi stored as a ChebSeries
/// with gamma_0 = 1 and phi >= -1e-9 on a dense check grid.
class BetaDensity {
  public:
    explicit BetaDensity(ChebSeries density);

    const ChebSeries& density() const { return density_; }
    int degree() const { return density_.degree(); }

    /// Reference measure beta itself (density == 1).
    static BetaDensity arcsine();
    /// The semicircle law alpha, with d(alpha)/d(beta) = 1 - phi_2.
    static BetaDensity semicircle();

  private:
    ChebSeries density_;
};

/// Difference of two beta-densities: a ChebSeries with gamma_0 = 0.
struct SignedDifference {
    ChebSeries coeffs;

    explicit SignedDifference(ChebSeries c);
    static SignedDifference between(const BetaDensity& mu, const BetaDensity& nu);

    double l2_beta_norm_sq() const;
};

/// Discrete probability measure: strictly increasing nodes with nonnegative
/// weights summing to 1 inside [a,b].  cell_width > 0 marks the nodes as
/// midpoints of uniform cells (used for analytic log-kernel corrections);
/// cell_width == 0 means genuine atoms.
struct GridMeasure {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 0.0;
    double cell_width = 0.0;

    GridMeasure() = default;
    GridMeasure(std::vector<double> nodes, std::vector<double> weights, double a, double b,
                double cell_width = 0.0);

    bool atomic() const { return cell_width == 0.0; }

    double cdf(double x) const;
    double quantile(double t) const;
    double mean() const;

    /// Pushforward under x -> scale*x + shift.
    GridMeasure affine(double scale, double shift) const;
};

/// Pushforward of a beta-density under x -> L x; lives on [-2L, 2L].
struct ScaledMeasure {
    BetaDensity base;
    double half_width;  // L

    ScaledMeasure(BetaDensity base, double half_width);
};

/// F(x) = (1/pi) [ (pi - theta) gamma_0 - sum_n gamma_n sin(n theta)/n ],
/// theta = arccos(x/2).  Defined for any series (signed differences included).
double cdf(const ChebSeries& density, double x);
double cdf(const BetaDensity& mu, double x);

/// Left-continuous generalized inverse of the CDF, by bisection in theta.
double quantile(const BetaDensity& mu, double t);

ScaledMeasure rescale(const BetaDensity& mu, double half_width);

/// Cell masses from exact CDF differences on n_cells uniform cells of [-2,2].
GridMeasure grid_from_density(const BetaDensity& mu, int n_cells);

/// Deterministic xorshift-free uniform double in [0,1) from a 64-bit state.
/// Thin wrapper so sweep output does not depend on libstdc++ distribution
/// internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    double uniform();              // [0,1)
    double uniform(double lo, double hi);

  private:
    std::uint64_t s_;
};

/// Random smooth strictly positive density: gamma_n ~ U(-1,1) * rho^n for
/// n = 1..max_degree, gamma_0 = 1, then shifted/scaled so min density >= 0.01.
BetaDensity random_beta_density(Rng& rng, int max_degree, double rho);

}  // namespace freeineq
