#ifndef MPLEX_DEGREE_STATS_HPP
#define MPLEX_DEGREE_STATS_HPP

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex {

struct DegreeDistribution {
    std::map<int, int> histogram;        // degree k -> node count
    std::map<int, double> normalized;    // degree k -> fraction P(k)
    int n = 0;
};

DegreeDistribution degree_distribution(const LayerGraph& g);

enum class FitMethod { LogLogLeastSquares, MaximumLikelihood };

const char* to_string(FitMethod m);

struct PowerLawFit {
    double gamma = 0.0;
    FitMethod method = FitMethod::LogLogLeastSquares;
    int k_min = 1;
    double goodness = 0.0;  // R^2 for least squares, KS distance for MLE
};

// Ordinary least squares of log P(k) on log k over nonzero bins with
// k >= k_min; gamma = -slope.
PowerLawFit fit_power_law_ls(const DegreeDistribution& dist, int k_min = 1);

// Same regression on explicit (k, p) points (the logarithmic-binning path).
PowerLawFit fit_power_law_ls_points(const std::vector<std::pair<double, double>>& points, int k_min);

// Geometric bins [b^i, b^(i+1)); returns (geometric-mean k, density) points.
std::vector<std::pair<double, double>> log_binned(const DegreeDistribution& dist, double base = 2.0);

// Discrete maximum-likelihood exponent over samples >= k_min, i.e. the root
// of the zeta-normalized likelihood equation (solved by bisection; the
// familiar closed form 1 + n/sum ln(k_i/(k_min - 1/2)) approximates this but
// drifts badly for small k_min). Goodness is the KS distance against the
// fitted CDF.
PowerLawFit fit_power_law_mle(const std::vector<int>& degrees, int k_min);

// Rows (k, P(k), fitted P(k)) for every observed degree >= 1, the fitted
// curve anchored to the empirical frequency at the smallest fitted k. With
// log_coords all three columns are log10.
std::vector<std::tuple<double, double, double>> fit_table(const DegreeDistribution& dist,
                                                          const PowerLawFit& fit, bool log_coords = false);

} // namespace mplex

#endif
