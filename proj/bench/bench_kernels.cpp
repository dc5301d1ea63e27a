// Times the OpenMP kernels against their serial references on a synthetic
// preferential-attachment graph. Usage: mplex_bench [nodes] [edges-per-node].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "mplex/centrality.hpp"
#include "mplex/community.hpp"
#include "mplex/graph.hpp"
#include "mplex/layout.hpp"
#include "mplex/reference.hpp"

using namespace mplex;

namespace {

LayerGraph preferential_attachment(int n, int edges_per_node, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> targets;  // repeated by degree, drives the attachment bias
    targets.push_back(0);
    for (int v = 1; v < n; ++v) {
        int m = std::min(edges_per_node, v);
        std::vector<int> picked;
        while (static_cast<int>(picked.size()) < m) {
            int t = targets[rng() % targets.size()];
            bool dup = false;
            for (int p : picked) dup = dup || p == t;
            if (!dup) picked.push_back(t);
        }
        for (int t : picked) {
            edges.emplace_back(std::min(v, t), std::max(v, t));
            targets.push_back(t);
            targets.push_back(v);
        }
    }
    std::vector<PersonId> ids;
    ids.reserve(static_cast<size_t>(n));
    char buf[16];
    for (int i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "n%05d", i);
        ids.emplace_back(buf);
    }
    return LayerGraph(EdgeKind::Work, std::move(ids), edges);
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 1500;
    int epn = argc > 2 ? std::atoi(argv[2]) : 4;
    LayerGraph g = preferential_attachment(n, epn, 42);
    std::printf("graph: %d nodes, %d edges\n\n", g.node_count(), g.edge_count());
    std::printf("%-18s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

    {
        std::vector<double> serial, parallel;
        double ts = time_ms([&] { serial = reference::betweenness(g); });
        double tp = time_ms([&] { parallel = betweenness(g).values; });
        std::printf("%-18s %12.1f %12.1f %7.2fx\n", "betweenness", ts, tp, ts / tp);
    }
    {
        std::vector<double> serial, parallel;
        double ts = time_ms([&] { serial = reference::edge_betweenness(g); });
        double tp = time_ms([&] { parallel = edge_betweenness(g); });
        std::printf("%-18s %12.1f %12.1f %7.2fx\n", "edge betweenness", ts, tp, ts / tp);
    }
    {
        std::vector<double> serial, parallel;
        double ts = time_ms([&] { serial = reference::closeness(g); });
        double tp = time_ms([&] { parallel = closeness(g).values; });
        std::printf("%-18s %12.1f %12.1f %7.2fx\n", "closeness", ts, tp, ts / tp);
    }
    {
        LayoutResult serial, parallel;
        double ts = time_ms([&] { serial = reference::force_layout(g, 7, 50); });
        double tp = time_ms([&] { parallel = force_layout(g, 7, 50); });
        std::printf("%-18s %12.1f %12.1f %7.2fx\n", "force layout x50", ts, tp, ts / tp);
    }
    return 0;
}
