#ifndef MPLEX_DETAIL_ZETA_HPP
#define MPLEX_DETAIL_ZETA_HPP

namespace mplex::detail {

// Hurwitz zeta sum_{j>=0} (a+j)^-s for s > 1, Euler-Maclaurin tail.
double hurwitz_zeta(double s, double a);

// Mean log of the zeta-normalized discrete power law on {a, a+1, ...}:
// E[ln K] = sum ln(k) k^-s / zeta(s, a). Strictly decreasing in s.
double power_law_mean_log(double s, double a);

} // namespace mplex::detail

#endif
