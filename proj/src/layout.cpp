#include "mplex/layout.hpp"

#include <cmath>

namespace mplex {

namespace {

constexpr double kSpeed = 0.3;        // integration step scale
constexpr double kCap0 = 0.5;         // initial displacement cap
constexpr double kCapDecay = 0.01;    // cap anneals as kCap0 / (1 + decay * iter)
constexpr double kMinDistance = 1e-9; // repulsion guard for coincident points

struct Lcg {
    std::uint64_t state;
    double next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
};

} // namespace

std::vector<Vec2> initial_positions(std::uint64_t seed, int n) {
    Lcg rng{seed};
    std::vector<Vec2> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x, y;
        do {
            x = 2.0 * rng.next() - 1.0;
            y = 2.0 * rng.next() - 1.0;
        } while (x * x + y * y > 1.0);
        pos[static_cast<size_t>(i)] = {x, y};
    }
    return pos;
}

LayoutResult force_layout_from(const LayerGraph& g, std::vector<Vec2> initial, int iterations,
                               LayoutParams params, std::uint64_t seed_tag) {
    if (iterations < 1) fail(errc::config_error, "force_layout needs iterations >= 1");
    const int n = g.node_count();
    if (static_cast<int>(initial.size()) != n)
        fail(errc::annotation_mismatch, "initial positions do not match node count");

    std::vector<Vec2> pos = std::move(initial);
    std::vector<Vec2> force(static_cast<size_t>(n));
    std::vector<double> mass(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) mass[static_cast<size_t>(i)] = static_cast<double>(g.degree(i)) + 1.0;

    for (int iter = 0; iter < iterations; ++iter) {
        const double cap = kCap0 / (1.0 + kCapDecay * static_cast<double>(iter));

        // Gather from the previous snapshot; every node is independent, so
        // the result does not depend on scheduling.
#pragma omp parallel for schedule(static)
        for (int u = 0; u < n; ++u) {
            double fx = 0.0, fy = 0.0;
            const Vec2 pu = pos[static_cast<size_t>(u)];
            for (int v : g.neighbors(u)) {
                fx += params.attraction * (pos[static_cast<size_t>(v)].x - pu.x);
                fy += params.attraction * (pos[static_cast<size_t>(v)].y - pu.y);
            }
            for (int v = 0; v < n; ++v) {
                if (v == u) continue;
                double dx = pu.x - pos[static_cast<size_t>(v)].x;
                double dy = pu.y - pos[static_cast<size_t>(v)].y;
                double d2 = dx * dx + dy * dy;
                double d = std::sqrt(d2);
                if (d < kMinDistance) d = kMinDistance, d2 = d * d;
                double rep = params.repulsion * mass[static_cast<size_t>(u)] * mass[static_cast<size_t>(v)] / d2;
                fx += rep * dx;
                fy += rep * dy;
            }
            fx -= params.gravity * pu.x;
            fy -= params.gravity * pu.y;
            force[static_cast<size_t>(u)] = {fx, fy};
        }

        for (int u = 0; u < n; ++u) {
            double sx = kSpeed * force[static_cast<size_t>(u)].x;
            double sy = kSpeed * force[static_cast<size_t>(u)].y;
            double len = std::sqrt(sx * sx + sy * sy);
            if (len > cap) {
                sx *= cap / len;
                sy *= cap / len;
            }
            pos[static_cast<size_t>(u)].x += sx;
            pos[static_cast<size_t>(u)].y += sy;
        }
    }

    LayoutResult out;
    out.positions = std::move(pos);
    out.seed = seed_tag;
    out.iterations = iterations;
    out.params = params;
    return out;
}

LayoutResult force_layout(const LayerGraph& g, std::uint64_t seed, int iterations, LayoutParams params) {
    return force_layout_from(g, initial_positions(seed, g.node_count()), iterations, params, seed);
}

} // namespace mplex
