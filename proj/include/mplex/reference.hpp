#ifndef MPLEX_REFERENCE_HPP
#define MPLEX_REFERENCE_HPP

#include "mplex/graph.hpp"
#include "mplex/layout.hpp"

namespace mplex::reference {

// Serial counterparts of the parallel kernels. They are deliberately plain
// single-threaded loops; tests compare the production kernels against them
// and the benchmark measures the gap.

std::vector<double> betweenness(const LayerGraph& g);       // same normalization as production
std::vector<double> edge_betweenness(const LayerGraph& g);  // aligned with g.edges()
std::vector<double> closeness(const LayerGraph& g);
LayoutResult force_layout(const LayerGraph& g, std::uint64_t seed, int iterations,
                          LayoutParams params = {});

} // namespace mplex::reference

#endif
