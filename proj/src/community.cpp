#include "mplex/community.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mplex/detail/brandes.hpp"
#include "mplex/detail/jacobi.hpp"

namespace mplex {

std::vector<std::vector<PersonId>> Partition::blocks() const {
    std::vector<std::vector<PersonId>> out(community_sizes.size());
    for (const auto& [id, block] : assignment) out[static_cast<size_t>(block)].push_back(id);
    return out;
}

Partition partition_from_blocks(const std::vector<std::vector<PersonId>>& blocks) {
    std::vector<std::vector<PersonId>> sorted = blocks;
    for (auto& b : sorted) {
        if (b.empty()) fail(errc::config_error, "empty community block");
        std::sort(b.begin(), b.end());
    }
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });

    Partition p;
    size_t n = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (const auto& id : sorted[i]) {
            if (!p.assignment.emplace(id, static_cast<int>(i)).second)
                fail(errc::config_error, "node '" + id + "' assigned twice");
        }
        p.community_sizes.push_back(static_cast<int>(sorted[i].size()));
        n += sorted[i].size();
    }
    for (int s : p.community_sizes)
        p.fractions.push_back(static_cast<double>(s) / static_cast<double>(n));
    return p;
}

std::vector<double> edge_betweenness(const LayerGraph& g) {
    detail::EdgeIndexer index(g);
    const int m = index.edge_count();
    const int n = g.node_count();
    if (m == 0) return {};
    std::vector<double> acc = detail::accumulate_source_passes(
        m, n, [&](int source, std::vector<double>& sink) { detail::brandes_edge_pass(g, index, source, sink); });
    for (double& v : acc) v /= 2.0;  // each unordered pair seen from both endpoints
    return acc;
}

GNDendrogram girvan_newman(const LayerGraph& g, int stop) {
    if (stop < 1) fail(errc::config_error, "girvan_newman needs stop >= 1");
    const int n = g.node_count();
    const int initial_components = static_cast<int>(connected_components(g).size());
    const int possible_splits = n - initial_components;
    if (stop > possible_splits)
        fail(errc::exhausted_edges, "requested " + std::to_string(stop) + " splits but only " +
                                        std::to_string(possible_splits) + " are possible");

    std::vector<std::pair<int, int>> current = g.edges();
    GNDendrogram result;
    int components = initial_components;

    while (static_cast<int>(result.splits.size()) < stop) {
        LayerGraph working(g.kind(), g.nodes(), current);
        std::vector<double> scores = edge_betweenness(working);
        auto working_edges = working.edges();

        // Strict > keeps the first (lexicographically smallest) max edge.
        int best = 0;
        for (int e = 1; e < static_cast<int>(working_edges.size()); ++e)
            if (scores[static_cast<size_t>(e)] > scores[static_cast<size_t>(best)]) best = e;
        std::pair<int, int> removed = working_edges[static_cast<size_t>(best)];

        current.erase(std::find(current.begin(), current.end(), removed));
        result.edges_removed_total += 1;

        LayerGraph after(g.kind(), g.nodes(), current);
        auto comps = connected_components(after);
        if (static_cast<int>(comps.size()) > components) {
            components = static_cast<int>(comps.size());
            result.splits.push_back(
                {{g.node(removed.first), g.node(removed.second)}, partition_from_blocks(comps)});
        }
    }
    return result;
}

SpectralBisection fiedler_bisection(const LayerGraph& g, double tol) {
    if (tol <= 0.0) fail(errc::config_error, "fiedler_bisection tol must be positive");
    const int n = g.node_count();
    if (n < 2) fail(errc::config_error, "fiedler_bisection needs at least 2 nodes");
    if (static_cast<int>(connected_components(g).size()) != 1)
        fail(errc::disconnected_graph, "fiedler_bisection requires a connected graph");

    std::vector<std::vector<double>> lap(static_cast<size_t>(n),
                                         std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        lap[static_cast<size_t>(i)][static_cast<size_t>(i)] = static_cast<double>(g.degree(i));
        for (int j : g.neighbors(i)) lap[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1.0;
    }

    detail::SymmetricEigen eig = detail::jacobi_eigen(lap);
    const double lambda2 = eig.values[1];
    std::vector<double> vec = eig.vectors[1];

    // Residual check against the exact Laplacian.
    double residual2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double lv = static_cast<double>(g.degree(i)) * vec[static_cast<size_t>(i)];
        for (int j : g.neighbors(i)) lv -= vec[static_cast<size_t>(j)];
        double r = lv - lambda2 * vec[static_cast<size_t>(i)];
        residual2 += r * r;
    }
    if (std::sqrt(residual2) > tol)
        fail(errc::no_convergence, "fiedler pair residual exceeds tol");

    // Canonical sign: first entry (in id order) that is not numerically zero
    // becomes non-negative.
    constexpr double kZero = 1e-12;
    for (int i = 0; i < n; ++i) {
        if (std::abs(vec[static_cast<size_t>(i)]) > kZero) {
            if (vec[static_cast<size_t>(i)] < 0.0)
                for (double& x : vec) x = -x;
            break;
        }
    }

    SpectralBisection out;
    out.fiedler_value = lambda2;
    out.degenerate_spectrum = n >= 3 && (eig.values[2] - lambda2) <= 1e-9 * std::max(1.0, std::abs(eig.values[2]));

    // Zeros join the non-negative block; after sign fixing the smallest id is
    // always in it, so it is block 0.
    std::vector<PersonId> non_negative, negative;
    for (int i = 0; i < n; ++i) {
        out.fiedler_vector[g.node(i)] = vec[static_cast<size_t>(i)];
        if (vec[static_cast<size_t>(i)] >= -kZero)
            non_negative.push_back(g.node(i));
        else
            negative.push_back(g.node(i));
    }
    Partition p;
    for (const auto& id : non_negative) p.assignment[id] = 0;
    for (const auto& id : negative) p.assignment[id] = 1;
    p.community_sizes = {static_cast<int>(non_negative.size()), static_cast<int>(negative.size())};
    p.fractions = {static_cast<double>(non_negative.size()) / n, static_cast<double>(negative.size()) / n};
    if (negative.empty()) {
        p.community_sizes.pop_back();
        p.fractions.pop_back();
    }
    out.partition = std::move(p);
    return out;
}

PartitionComparison compare_partitions(const Partition& p, const Partition& q) {
    if (p.assignment.size() != q.assignment.size())
        fail(errc::node_set_mismatch, "partitions cover different node counts");
    for (const auto& [id, _] : p.assignment)
        if (!q.assignment.count(id)) fail(errc::node_set_mismatch, "node '" + id + "' missing from second partition");

    const int pk = p.block_count();
    const int qk = q.block_count();
    auto p_blocks = p.blocks();
    auto q_blocks = q.blocks();

    // Overlap sizes plus the smallest shared id per cell for symmetric
    // tie-breaking.
    std::vector<std::vector<int>> overlap(static_cast<size_t>(pk), std::vector<int>(static_cast<size_t>(qk), 0));
    std::vector<std::vector<PersonId>> witness(static_cast<size_t>(pk),
                                               std::vector<PersonId>(static_cast<size_t>(qk)));
    for (const auto& [id, pb] : p.assignment) {
        int qb = q.assignment.at(id);
        auto& w = witness[static_cast<size_t>(pb)][static_cast<size_t>(qb)];
        if (overlap[static_cast<size_t>(pb)][static_cast<size_t>(qb)] == 0 || id < w) w = id;
        overlap[static_cast<size_t>(pb)][static_cast<size_t>(qb)] += 1;
    }

    PartitionComparison out;
    int matched = 0;

    if (pk == 2 && qk == 2) {
        int straight = overlap[0][0] + overlap[1][1];
        int crossed = overlap[0][1] + overlap[1][0];
        if (straight >= crossed) {
            out.matched_blocks = {{0, 0}, {1, 1}};
            matched = straight;
        } else {
            out.matched_blocks = {{0, 1}, {1, 0}};
            matched = crossed;
        }
    } else {
        std::vector<bool> p_used(static_cast<size_t>(pk), false), q_used(static_cast<size_t>(qk), false);
        while (true) {
            int best_i = -1, best_j = -1, best = 0;
            for (int i = 0; i < pk; ++i) {
                if (p_used[static_cast<size_t>(i)]) continue;
                for (int j = 0; j < qk; ++j) {
                    if (q_used[static_cast<size_t>(j)]) continue;
                    int o = overlap[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (o > best ||
                        (o == best && o > 0 &&
                         witness[static_cast<size_t>(i)][static_cast<size_t>(j)] <
                             witness[static_cast<size_t>(best_i)][static_cast<size_t>(best_j)])) {
                        best = o;
                        best_i = i;
                        best_j = j;
                    }
                }
            }
            if (best == 0) break;
            p_used[static_cast<size_t>(best_i)] = true;
            q_used[static_cast<size_t>(best_j)] = true;
            out.matched_blocks.emplace_back(best_i, best_j);
            matched += best;
        }
        std::sort(out.matched_blocks.begin(), out.matched_blocks.end());
    }

    out.migrations = static_cast<int>(p.assignment.size()) - matched;
    return out;
}

} // namespace mplex
