#ifndef MPLEX_DETAIL_JACOBI_HPP
#define MPLEX_DETAIL_JACOBI_HPP

#include <vector>

namespace mplex::detail {

struct SymmetricEigen {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Deterministic;
// intended for the reference scale (hundreds of nodes).
SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> a, int max_sweeps = 64);

} // namespace mplex::detail

#endif
