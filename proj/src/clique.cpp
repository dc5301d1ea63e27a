#include "mplex/clique.hpp"

#include <algorithm>
#include <set>

namespace mplex {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void expand(const LayerGraph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
            std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Tomita pivot: the candidate covering most of P prunes hardest.
    int pivot = -1;
    size_t best = 0;
    bool first = true;
    for (const auto& pool : {p, x}) {
        for (int u : pool) {
            size_t covered = intersect_sorted(p, g.neighbors(u)).size();
            if (first || covered > best) {
                best = covered;
                pivot = u;
                first = false;
            }
        }
    }
    std::vector<int> candidates;
    const auto& pivot_nbrs = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pivot_nbrs.begin(), pivot_nbrs.end(),
                        std::back_inserter(candidates));
    for (int v : candidates) {
        r.push_back(v);
        expand(g, r, intersect_sorted(p, g.neighbors(v)), intersect_sorted(x, g.neighbors(v)), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

// Peel minimum-degree vertices; the resulting order bounds every top-level
// candidate set by the degeneracy.
std::vector<int> degeneracy_order(const LayerGraph& g) {
    const int n = g.node_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::set<std::pair<int, int>> by_degree;
    for (int i = 0; i < n; ++i) {
        deg[static_cast<size_t>(i)] = g.degree(i);
        by_degree.insert({deg[static_cast<size_t>(i)], i});
    }
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<bool> removed(static_cast<size_t>(n), false);
    while (!by_degree.empty()) {
        auto [d, v] = *by_degree.begin();
        by_degree.erase(by_degree.begin());
        removed[static_cast<size_t>(v)] = true;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<size_t>(w)]) continue;
            by_degree.erase({deg[static_cast<size_t>(w)], w});
            deg[static_cast<size_t>(w)] -= 1;
            by_degree.insert({deg[static_cast<size_t>(w)], w});
        }
    }
    return order;
}

std::vector<std::vector<int>> enumerate_maximal(const LayerGraph& g) {
    const int n = g.node_count();
    std::vector<int> order = degeneracy_order(g);
    std::vector<int> position(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) position[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    // Each seed explores an independent subtree; collectors merge afterwards
    // and the canonical sort makes the output order thread-independent.
    const int workers = std::max(1, std::min(n, 64));
    std::vector<std::vector<std::vector<int>>> found(static_cast<size_t>(workers));
#pragma omp parallel for schedule(dynamic)
    for (int slot = 0; slot < workers; ++slot) {
        for (int i = slot; i < n; i += workers) {
            int v = order[static_cast<size_t>(i)];
            std::vector<int> p, x;
            for (int w : g.neighbors(v)) {
                if (position[static_cast<size_t>(w)] > i)
                    p.push_back(w);
                else
                    x.push_back(w);
            }
            std::sort(p.begin(), p.end());
            std::sort(x.begin(), x.end());
            std::vector<int> r = {v};
            expand(g, r, std::move(p), std::move(x), found[static_cast<size_t>(slot)]);
        }
    }

    std::vector<std::vector<int>> all;
    for (auto& part : found)
        for (auto& c : part) {
            std::sort(c.begin(), c.end());
            all.push_back(std::move(c));
        }
    return all;
}

CliqueSet finish(const LayerGraph& g, std::vector<std::vector<int>> raw, bool include_trivial,
                 bool maximum_only) {
    size_t max_size = 0;
    for (const auto& c : raw) max_size = std::max(max_size, c.size());

    CliqueSet out;
    out.size_of_maximum = static_cast<int>(max_size);
    for (const auto& c : raw) {
        if (maximum_only && c.size() != max_size) continue;
        if (!include_trivial && c.size() < 2) continue;
        std::vector<PersonId> ids;
        ids.reserve(c.size());
        for (int i : c) ids.push_back(g.node(i));
        out.cliques.push_back(std::move(ids));
    }
    std::sort(out.cliques.begin(), out.cliques.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    for (const auto& c : out.cliques)
        if (static_cast<int>(c.size()) == out.size_of_maximum)
            for (const auto& id : c) out.membership_counts[id] += 1;
    return out;
}

} // namespace

CliqueSet maximal_cliques(const LayerGraph& g, bool include_trivial) {
    return finish(g, enumerate_maximal(g), include_trivial, false);
}

CliqueSet maximum_cliques(const LayerGraph& g, bool include_trivial) {
    return finish(g, enumerate_maximal(g), include_trivial, true);
}

std::pair<int, double> clique_overlap(const std::vector<PersonId>& a, const std::vector<PersonId>& b) {
    std::vector<PersonId> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::vector<PersonId> inter;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    size_t denom = std::max(sa.size(), sb.size());
    double fraction = denom == 0 ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(denom);
    return {static_cast<int>(inter.size()), fraction};
}

} // namespace mplex
