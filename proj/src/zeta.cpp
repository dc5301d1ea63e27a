#include "mplex/detail/zeta.hpp"

#include <cmath>

namespace mplex::detail {

namespace {

constexpr int kLeadingTerms = 48;

} // namespace

double hurwitz_zeta(double s, double a) {
    double sum = 0.0;
    for (int j = 0; j < kLeadingTerms; ++j) sum += std::pow(a + j, -s);
    const double b = a + kLeadingTerms;
    // integral tail plus the first Euler-Maclaurin corrections
    sum += std::pow(b, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(b, -s);
    sum += s * std::pow(b, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(b, -s - 3.0) / 720.0;
    return sum;
}

double power_law_mean_log(double s, double a) {
    double numerator = 0.0;
    for (int j = 0; j < kLeadingTerms; ++j) {
        double k = a + j;
        numerator += std::log(k) * std::pow(k, -s);
    }
    const double b = a + kLeadingTerms;
    const double lb = std::log(b);
    // integral of ln(x) x^-s from b, then f(b)/2 - f'(b)/12 with
    // f(x) = ln(x) x^-s and f'(x) = x^(-s-1) (1 - s ln x)
    numerator += std::pow(b, 1.0 - s) * (lb / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    numerator += 0.5 * lb * std::pow(b, -s);
    numerator -= std::pow(b, -s - 1.0) * (1.0 - s * lb) / 12.0;
    return numerator / hurwitz_zeta(s, a);
}

} // namespace mplex::detail
