#include "mplex/reference.hpp"

#include <cmath>
#include <queue>

#include "mplex/detail/brandes.hpp"

namespace mplex::reference {

std::vector<double> betweenness(const LayerGraph& g) {
    const int n = g.node_count();
    std::vector<double> acc(static_cast<size_t>(n), 0.0);
    if (n < 3) return acc;
    for (int s = 0; s < n; ++s) detail::brandes_node_pass(g, s, acc);
    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (double& v : acc) v = v / 2.0 / norm;
    return acc;
}

std::vector<double> edge_betweenness(const LayerGraph& g) {
    detail::EdgeIndexer index(g);
    std::vector<double> acc(static_cast<size_t>(index.edge_count()), 0.0);
    for (int s = 0; s < g.node_count(); ++s) detail::brandes_edge_pass(g, index, s, acc);
    for (double& v : acc) v /= 2.0;
    return acc;
}

std::vector<double> closeness(const LayerGraph& g) {
    const int n = g.node_count();
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(v)] = 0;
        q.push(v);
        long long total = 0;
        int reached = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            total += dist[static_cast<size_t>(u)];
            ++reached;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        if (reached < n) fail(errc::disconnected_graph, "closeness requires a connected graph");
        out[static_cast<size_t>(v)] = n > 1 ? static_cast<double>(n - 1) / static_cast<double>(total) : 0.0;
    }
    return out;
}

LayoutResult force_layout(const LayerGraph& g, std::uint64_t seed, int iterations, LayoutParams params) {
    if (iterations < 1) fail(errc::config_error, "force_layout needs iterations >= 1");
    const int n = g.node_count();
    std::vector<Vec2> pos = initial_positions(seed, n);
    std::vector<Vec2> force(static_cast<size_t>(n));
    std::vector<double> mass(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) mass[static_cast<size_t>(i)] = static_cast<double>(g.degree(i)) + 1.0;

    constexpr double speed = 0.3;
    constexpr double cap0 = 0.5;
    constexpr double cap_decay = 0.01;
    constexpr double min_distance = 1e-9;

    for (int iter = 0; iter < iterations; ++iter) {
        const double cap = cap0 / (1.0 + cap_decay * static_cast<double>(iter));
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
                if (d < min_distance) d = min_distance, d2 = d * d;
                double rep = params.repulsion * mass[static_cast<size_t>(u)] * mass[static_cast<size_t>(v)] / d2;
                fx += rep * dx;
                fy += rep * dy;
            }
            fx -= params.gravity * pu.x;
            fy -= params.gravity * pu.y;
            force[static_cast<size_t>(u)] = {fx, fy};
        }
        for (int u = 0; u < n; ++u) {
            double sx = speed * force[static_cast<size_t>(u)].x;
            double sy = speed * force[static_cast<size_t>(u)].y;
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
    out.seed = seed;
    out.iterations = iterations;
    out.params = params;
    return out;
}

} // namespace mplex::reference
