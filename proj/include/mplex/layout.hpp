#ifndef MPLEX_LAYOUT_HPP
#define MPLEX_LAYOUT_HPP

#include <cstdint>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct LayoutParams {
    double attraction = 1.0;
    double repulsion = 2.0;
    double gravity = 0.05;
};

struct LayoutResult {
    std::vector<Vec2> positions;  // aligned with LayerGraph::nodes()
    std::uint64_t seed = 0;
    int iterations = 0;
    LayoutParams params;
};

// Seeded placement on the unit disc from a fixed 64-bit linear congruential
// generator (state = state * 6364136223846793005 + 1442695040888963407;
// uniform double = high 53 bits / 2^53), so identical seeds give identical
// positions on every platform.
std::vector<Vec2> initial_positions(std::uint64_t seed, int n);

// Degree-weighted attraction/repulsion with weak central gravity.
// Per iteration every node gathers: attraction along each incident edge
// proportional to distance, repulsion from every other node proportional to
// (deg(u)+1)(deg(v)+1)/distance, and gravity toward the origin; displacements
// are applied after the gather with an annealed step cap. Deterministic for
// any thread count.
LayoutResult force_layout(const LayerGraph& g, std::uint64_t seed, int iterations,
                          LayoutParams params = {});

// Same dynamics from caller-provided starting positions.
LayoutResult force_layout_from(const LayerGraph& g, std::vector<Vec2> initial, int iterations,
                               LayoutParams params = {}, std::uint64_t seed_tag = 0);

} // namespace mplex

#endif
