#include "mplex/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "mplex/detail/brandes.hpp"

namespace mplex {

const char* metric_label(Metric m) {
    switch (m) {
        case Metric::Degree: return "Degree";
        case Metric::Betweenness: return "Betweenness";
        case Metric::Closeness: return "Closeness";
        case Metric::Eigenvector: return "Eigencentrality";
    }
    return "?";
}

CentralityScores degree_centrality(const LayerGraph& g) {
    CentralityScores s{Metric::Degree, {}, "raw edge count"};
    s.values.reserve(static_cast<size_t>(g.node_count()));
    for (int i = 0; i < g.node_count(); ++i) s.values.push_back(static_cast<double>(g.degree(i)));
    return s;
}

CentralityScores betweenness(const LayerGraph& g) {
    const int n = g.node_count();
    CentralityScores s{Metric::Betweenness, std::vector<double>(static_cast<size_t>(n), 0.0),
                       "pairs normalized by (n-1)(n-2)/2"};
    if (n < 3) return s;

    std::vector<double> acc = detail::accumulate_source_passes(
        n, n, [&](int source, std::vector<double>& sink) { detail::brandes_node_pass(g, source, sink); });

    // Each unordered pair was visited from both endpoints.
    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (int i = 0; i < n; ++i) s.values[static_cast<size_t>(i)] = acc[static_cast<size_t>(i)] / 2.0 / norm;
    return s;
}

namespace {

void require_connected(const LayerGraph& g, const char* op) {
    if (g.node_count() == 0) fail(errc::empty_graph, op);
    if (static_cast<int>(connected_components(g).size()) != 1)
        fail(errc::disconnected_graph, std::string(op) + " requires a connected graph");
}

} // namespace

CentralityScores closeness(const LayerGraph& g) {
    require_connected(g, "closeness");
    const int n = g.node_count();
    CentralityScores s{Metric::Closeness, std::vector<double>(static_cast<size_t>(n), 0.0),
                       "(n-1)/sum of shortest-path distances"};
    if (n == 1) {
        s.values[0] = 0.0;
        return s;
    }

#pragma omp parallel for schedule(dynamic, 8)
    for (int v = 0; v < n; ++v) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(v)] = 0;
        q.push(v);
        long long total = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            total += dist[static_cast<size_t>(u)];
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        s.values[static_cast<size_t>(v)] = static_cast<double>(n - 1) / static_cast<double>(total);
    }
    return s;
}

CentralityScores eigencentrality(const LayerGraph& g, double tol, int max_iter) {
    require_connected(g, "eigencentrality");
    if (tol <= 0.0) fail(errc::config_error, "eigencentrality tol must be positive");
    const int n = g.node_count();
    CentralityScores s{Metric::Eigenvector, std::vector<double>(static_cast<size_t>(n), 0.0),
                       "Euclidean norm 1"};
    if (n == 1) {
        s.values[0] = 1.0;
        return s;
    }

    // Iterate on A + I: the diagonal shift breaks the bipartite +/-lambda
    // oscillation and keeps iterates strictly positive.
    std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<size_t>(n), 0.0);
    double lambda = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            double acc = x[static_cast<size_t>(i)];
            for (int j : g.neighbors(i)) acc += x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = acc;
        }
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (double& v : y) v /= norm;
        x.swap(y);

        // Rayleigh quotient and residual on the original A.
        lambda = 0.0;
        double residual2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double ax = 0.0;
            for (int j : g.neighbors(i)) ax += x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = ax;
            lambda += ax * x[static_cast<size_t>(i)];
        }
        for (int i = 0; i < n; ++i) {
            double r = y[static_cast<size_t>(i)] - lambda * x[static_cast<size_t>(i)];
            residual2 += r * r;
        }
        if (std::sqrt(residual2) <= tol) {
            s.values = x;
            return s;
        }
    }
    fail(errc::no_convergence, "power iteration did not reach tol within " + std::to_string(max_iter) +
                                   " iterations");
}

RankedTable ranked_table(const LayerGraph& g, int k) {
    if (k < 1) fail(errc::config_error, "ranked_table needs k >= 1");
    require_connected(g, "ranked_table");

    RankedTable t;
    t.k = k;
    t.scores[static_cast<size_t>(Metric::Degree)] = degree_centrality(g).values;
    t.scores[static_cast<size_t>(Metric::Betweenness)] = betweenness(g).values;
    t.scores[static_cast<size_t>(Metric::Closeness)] = closeness(g).values;
    t.scores[static_cast<size_t>(Metric::Eigenvector)] = eigencentrality(g).values;

    const int n = g.node_count();
    for (int m = 0; m < kMetricCount; ++m) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        const auto& vals = t.scores[static_cast<size_t>(m)];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (vals[static_cast<size_t>(a)] != vals[static_cast<size_t>(b)])
                return vals[static_cast<size_t>(a)] > vals[static_cast<size_t>(b)];
            return g.node(a) < g.node(b);
        });
        int rows = std::min(k, n);
        for (int r = 0; r < rows; ++r)
            t.top[static_cast<size_t>(m)].emplace_back(g.node(order[static_cast<size_t>(r)]),
                                                       vals[static_cast<size_t>(order[static_cast<size_t>(r)])]);
    }
    return t;
}

std::string ranked_table_text(const RankedTable& table) {
    std::ostringstream out;
    size_t id_width = 4;
    for (const auto& col : table.top)
        for (const auto& [id, _] : col) id_width = std::max(id_width, id.size());

    for (Metric m : kAllMetrics) {
        out << metric_label(m);
        const auto& col = table.top[static_cast<size_t>(static_cast<int>(m))];
        out << "\n";
        for (const auto& [id, value] : col) {
            std::string padded = id;
            padded.resize(id_width, ' ');
            char buf[64];
            if (m == Metric::Degree)
                std::snprintf(buf, sizeof buf, "%.0f", value);
            else
                std::snprintf(buf, sizeof buf, "%.3f", value);
            out << "  " << padded << "  " << buf << "\n";
        }
    }
    return out.str();
}

} // namespace mplex
