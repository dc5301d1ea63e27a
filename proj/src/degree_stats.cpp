#include "mplex/degree_stats.hpp"

#include <algorithm>
#include <cmath>

#include "mplex/detail/zeta.hpp"

namespace mplex {

const char* to_string(FitMethod m) {
    return m == FitMethod::LogLogLeastSquares ? "log-log-least-squares" : "maximum-likelihood";
}

DegreeDistribution degree_distribution(const LayerGraph& g) {
    if (g.node_count() == 0) fail(errc::empty_graph, "degree_distribution of empty graph");
    DegreeDistribution d;
    d.n = g.node_count();
    for (int i = 0; i < g.node_count(); ++i) d.histogram[g.degree(i)] += 1;
    for (const auto& [k, count] : d.histogram)
        d.normalized[k] = static_cast<double>(count) / static_cast<double>(d.n);
    return d;
}

PowerLawFit fit_power_law_ls_points(const std::vector<std::pair<double, double>>& points, int k_min) {
    std::vector<std::pair<double, double>> logs;
    for (const auto& [k, p] : points)
        if (k >= static_cast<double>(k_min) && p > 0.0) logs.emplace_back(std::log(k), std::log(p));
    if (logs.size() < 3)
        fail(errc::insufficient_support,
             "power-law regression needs >= 3 nonzero bins at k >= " + std::to_string(k_min));

    const double n = static_cast<double>(logs.size());
    double sx = 0, sy = 0;
    for (const auto& [x, y] : logs) {
        sx += x;
        sy += y;
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : logs) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0.0) fail(errc::insufficient_support, "degenerate regression support");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double ss_res = 0.0;
    for (const auto& [x, y] : logs) {
        double r = y - (intercept + slope * x);
        ss_res += r * r;
    }
    double r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    r2 = std::clamp(r2, 0.0, 1.0);

    PowerLawFit fit;
    fit.gamma = -slope;
    fit.method = FitMethod::LogLogLeastSquares;
    fit.k_min = k_min;
    fit.goodness = r2;
    return fit;
}

PowerLawFit fit_power_law_ls(const DegreeDistribution& dist, int k_min) {
    if (k_min < 1) fail(errc::config_error, "k_min must be >= 1");
    std::vector<std::pair<double, double>> points;
    for (const auto& [k, p] : dist.normalized)
        if (k >= 1) points.emplace_back(static_cast<double>(k), p);
    return fit_power_law_ls_points(points, k_min);
}

std::vector<std::pair<double, double>> log_binned(const DegreeDistribution& dist, double base) {
    if (base <= 1.0) fail(errc::config_error, "log binning base must exceed 1");
    std::vector<std::pair<double, double>> out;
    double lo = 1.0;
    int max_k = dist.normalized.empty() ? 0 : dist.normalized.rbegin()->first;
    while (lo <= static_cast<double>(max_k)) {
        double hi = lo * base;
        double mass = 0.0;
        for (const auto& [k, p] : dist.normalized)
            if (static_cast<double>(k) >= lo && static_cast<double>(k) < hi) mass += p;
        if (mass > 0.0) out.emplace_back(std::sqrt(lo * (hi - 1.0)), mass / (hi - lo));
        lo = hi;
    }
    return out;
}

PowerLawFit fit_power_law_mle(const std::vector<int>& degrees, int k_min) {
    if (k_min < 1) fail(errc::config_error, "k_min must be >= 1");
    std::vector<int> sample;
    for (int k : degrees)
        if (k >= k_min) sample.push_back(k);
    if (sample.size() < 50)
        fail(errc::insufficient_support,
             "MLE needs >= 50 samples at k >= " + std::to_string(k_min) + ", got " +
                 std::to_string(sample.size()));

    double mean_log = 0.0;
    bool any_above = false;
    for (int k : sample) {
        if (k > k_min) any_above = true;
        mean_log += std::log(static_cast<double>(k));
    }
    mean_log /= static_cast<double>(sample.size());
    if (!any_above)
        fail(errc::invalid_exponent, "every sample equals k_min; no tail to estimate from");

    // Likelihood equation for the zeta-normalized model: the exponent where
    // the model's mean log degree equals the sample's. power_law_mean_log is
    // strictly decreasing, so plain bisection finds it.
    const double a = static_cast<double>(k_min);
    double lo = 1.0 + 1e-9, hi = 64.0;
    if (detail::power_law_mean_log(hi, a) > mean_log)
        fail(errc::invalid_exponent, "sample has essentially no mass above k_min");
    for (int step = 0; step < 200; ++step) {
        double mid = 0.5 * (lo + hi);
        if (detail::power_law_mean_log(mid, a) > mean_log)
            lo = mid;
        else
            hi = mid;
    }

    PowerLawFit fit;
    fit.method = FitMethod::MaximumLikelihood;
    fit.k_min = k_min;
    fit.gamma = 0.5 * (lo + hi);
    if (fit.gamma <= 1.0 + 1e-6)
        fail(errc::invalid_exponent, "estimated exponent <= 1");

    // KS distance between the empirical CDF and the fitted one,
    // F(k) = 1 - zeta(gamma, k+1) / zeta(gamma, k_min).
    std::sort(sample.begin(), sample.end());
    const double m = static_cast<double>(sample.size());
    const double z = detail::hurwitz_zeta(fit.gamma, a);
    double ks = 0.0;
    size_t i = 0;
    while (i < sample.size()) {
        size_t j = i;
        while (j < sample.size() && sample[j] == sample[i]) ++j;
        double ecdf = static_cast<double>(j) / m;
        double fitted = 1.0 - detail::hurwitz_zeta(fit.gamma, static_cast<double>(sample[i]) + 1.0) / z;
        ks = std::max(ks, std::abs(ecdf - fitted));
        i = j;
    }
    fit.goodness = ks;
    return fit;
}

std::vector<std::tuple<double, double, double>> fit_table(const DegreeDistribution& dist,
                                                          const PowerLawFit& fit, bool log_coords) {
    double anchor_k = 0.0, anchor_p = 0.0;
    for (const auto& [k, p] : dist.normalized) {
        if (k >= fit.k_min && p > 0.0) {
            anchor_k = static_cast<double>(k);
            anchor_p = p;
            break;
        }
    }
    std::vector<std::tuple<double, double, double>> rows;
    for (const auto& [k, p] : dist.normalized) {
        if (k < 1) continue;
        double fitted = anchor_p > 0.0
                            ? anchor_p * std::pow(static_cast<double>(k) / anchor_k, -fit.gamma)
                            : 0.0;
        if (log_coords) {
            if (p <= 0.0 || fitted <= 0.0) continue;
            rows.emplace_back(std::log10(static_cast<double>(k)), std::log10(p), std::log10(fitted));
        } else {
            rows.emplace_back(static_cast<double>(k), p, fitted);
        }
    }
    return rows;
}

} // namespace mplex
