#include "mplex/detail/brandes.hpp"

#include <queue>

namespace mplex::detail {

EdgeIndexer::EdgeIndexer(const LayerGraph& g) : g_(&g) {
    const int n = g.node_count();
    row_start_.assign(static_cast<size_t>(n) + 1, 0);
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        auto first_gt = std::upper_bound(nbrs.begin(), nbrs.end(), u);
        row_start_[static_cast<size_t>(u) + 1] =
            row_start_[static_cast<size_t>(u)] + static_cast<int>(nbrs.end() - first_gt);
    }
}

int EdgeIndexer::operator()(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& nbrs = g_->neighbors(u);
    auto first_gt = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    auto pos = std::lower_bound(first_gt, nbrs.end(), v);
    return row_start_[static_cast<size_t>(u)] + static_cast<int>(pos - first_gt);
}

namespace {

struct SsspState {
    std::vector<int> order;                // BFS visit order
    std::vector<std::vector<int>> pred;    // shortest-path predecessors
    std::vector<double> sigma;             // path counts; exact below 2^53
    std::vector<double> delta;             // dependencies
};

void shortest_path_dag(const LayerGraph& g, int source, SsspState& st) {
    const int n = g.node_count();
    st.order.clear();
    st.order.reserve(static_cast<size_t>(n));
    st.pred.assign(static_cast<size_t>(n), {});
    st.sigma.assign(static_cast<size_t>(n), 0.0);
    st.delta.assign(static_cast<size_t>(n), 0.0);
    std::vector<int> dist(static_cast<size_t>(n), -1);

    st.sigma[static_cast<size_t>(source)] = 1;
    dist[static_cast<size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        st.order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] + 1) {
                st.sigma[static_cast<size_t>(w)] += st.sigma[static_cast<size_t>(v)];
                st.pred[static_cast<size_t>(w)].push_back(v);
            }
        }
    }
}

} // namespace

void brandes_node_pass(const LayerGraph& g, int source, std::vector<double>& sink) {
    SsspState st;
    shortest_path_dag(g, source, st);
    for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
        int w = *it;
        for (int v : st.pred[static_cast<size_t>(w)]) {
            st.delta[static_cast<size_t>(v)] +=
                static_cast<double>(st.sigma[static_cast<size_t>(v)]) /
                static_cast<double>(st.sigma[static_cast<size_t>(w)]) *
                (1.0 + st.delta[static_cast<size_t>(w)]);
        }
        if (w != source) sink[static_cast<size_t>(w)] += st.delta[static_cast<size_t>(w)];
    }
}

void brandes_edge_pass(const LayerGraph& g, const EdgeIndexer& index, int source,
                       std::vector<double>& sink) {
    SsspState st;
    shortest_path_dag(g, source, st);
    for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
        int w = *it;
        for (int v : st.pred[static_cast<size_t>(w)]) {
            double c = static_cast<double>(st.sigma[static_cast<size_t>(v)]) /
                       static_cast<double>(st.sigma[static_cast<size_t>(w)]) *
                       (1.0 + st.delta[static_cast<size_t>(w)]);
            st.delta[static_cast<size_t>(v)] += c;
            sink[static_cast<size_t>(index(v, w))] += c;
        }
    }
}

} // namespace mplex::detail
