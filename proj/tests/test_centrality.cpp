#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "mplex/centrality.hpp"
#include "mplex/ingest.hpp"
#include "mplex/reference.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mplex;

namespace {

LayerGraph path4() { return oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
LayerGraph star3() { return oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Same topology under reversed labels: n00<->m09 etc., exercising the
// node-order machinery underneath every metric.
LayerGraph relabel_reversed(const LayerGraph& g, std::vector<int>* new_index_of_old) {
    const int n = g.node_count();
    std::vector<PersonId> ids(static_cast<size_t>(n));
    char buf[16];
    for (int i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "m%02d", n - 1 - i);
        ids[static_cast<size_t>(i)] = buf;  // old index i -> id m(n-1-i)
    }
    std::vector<PersonId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    new_index_of_old->assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        (*new_index_of_old)[static_cast<size_t>(i)] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), ids[static_cast<size_t>(i)]) - sorted.begin());
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back((*new_index_of_old)[static_cast<size_t>(u)],
                           (*new_index_of_old)[static_cast<size_t>(v)]);
    return LayerGraph(g.kind(), std::move(sorted), edges);
}

} // namespace

TEST_CASE("degree centrality returns raw counts") {
    auto k3 = oracle::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    for (double v : degree_centrality(k3).values) CHECK(v == 2.0);
    auto s = star3();
    auto dc = degree_centrality(s);
    CHECK(dc.at(s, "n00") == 3.0);
    CHECK(dc.at(s, "n01") == 1.0);
}

TEST_CASE("hand-derived betweenness values") {
    auto p = path4();
    auto bc = betweenness(p);
    CHECK(bc.at(p, "n01") == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    auto s = star3();
    CHECK(betweenness(s).at(s, "n00") == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& leaf : {"n01", "n02", "n03"})
        CHECK(betweenness(s).at(s, leaf) == doctest::Approx(0.0));
}

TEST_CASE("betweenness equals naive path enumeration on random graphs") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + rng.next_below(5);
        auto g = oracle::random_graph(n, 0.2 + 0.6 * rng.next_double(), rng);
        auto fast = betweenness(g).values;
        auto naive = oracle::betweenness_enumerate(g);
        REQUIRE(fast.size() == naive.size());
        for (size_t i = 0; i < fast.size(); ++i)
            CHECK(fast[i] == doctest::Approx(naive[i]).epsilon(1e-9));
    }
}

TEST_CASE("parallel betweenness matches the serial reference") {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_connected_graph(40, 30, rng);
        auto fast = betweenness(g).values;
        auto serial = reference::betweenness(g);
        for (size_t i = 0; i < fast.size(); ++i)
            CHECK(fast[i] == doctest::Approx(serial[i]).epsilon(1e-12));
    }
}

TEST_CASE("hand-derived closeness values") {
    auto p3 = oracle::make_graph(3, {{0, 1}, {1, 2}});
    auto cc = closeness(p3);
    CHECK(cc.at(p3, "n01") == doctest::Approx(1.0));
    CHECK(cc.at(p3, "n00") == doctest::Approx(2.0 / 3.0));

    auto k4 = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (double v : closeness(k4).values) CHECK(v == doctest::Approx(1.0));

    auto split = oracle::make_graph(4, {{0, 1}, {2, 3}});
    CHECK_ERRC(closeness(split), errc::disconnected_graph);
}

TEST_CASE("closeness matches the BFS oracle and the serial reference") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_connected_graph(25, 15, rng);
        auto fast = closeness(g).values;
        auto naive = oracle::closeness_bfs(g);
        auto serial = reference::closeness(g);
        for (size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i] == doctest::Approx(naive[i]).epsilon(1e-12));
            CHECK(fast[i] == serial[i]);
        }
    }
}

TEST_CASE("eigencentrality on the 4-cycle is uniform") {
    auto c4 = oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (double v : eigencentrality(c4).values) CHECK(v == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("eigencentrality of the star matches the analytic eigensystem") {
    auto s = star3();
    auto ec = eigencentrality(s);
    CHECK(ec.at(s, "n00") == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
    for (const auto& leaf : {"n01", "n02", "n03"})
        CHECK(ec.at(s, leaf) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-6));

    auto dense = oracle::eigencentrality_dense(s);
    for (int i = 0; i < s.node_count(); ++i)
        CHECK(ec.values[static_cast<size_t>(i)] == doctest::Approx(dense[static_cast<size_t>(i)]).epsilon(1e-8));
}

TEST_CASE("eigencentrality satisfies its own contract on random graphs") {
    oracle::Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_connected_graph(4 + rng.next_below(20), rng.next_below(12), rng);
        const double tol = 1e-10;
        auto ec = eigencentrality(g, tol);
        double norm2 = 0.0;
        for (double v : ec.values) {
            CHECK(v >= 0.0);
            norm2 += v * v;
        }
        CHECK(std::sqrt(norm2) == doctest::Approx(1.0).epsilon(1e-12));

        // residual ||Ax - lambda x|| <= tol with lambda the Rayleigh quotient
        const int n = g.node_count();
        std::vector<double> ax(static_cast<size_t>(n), 0.0);
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j : g.neighbors(i)) ax[static_cast<size_t>(i)] += ec.values[static_cast<size_t>(j)];
            lambda += ax[static_cast<size_t>(i)] * ec.values[static_cast<size_t>(i)];
        }
        double residual2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = ax[static_cast<size_t>(i)] - lambda * ec.values[static_cast<size_t>(i)];
            residual2 += r * r;
        }
        CHECK(std::sqrt(residual2) <= tol);
    }
    auto split = oracle::make_graph(4, {{0, 1}, {2, 3}});
    CHECK_ERRC(eigencentrality(split), errc::disconnected_graph);
}

TEST_CASE("eigencentrality reports non-convergence instead of a bad vector") {
    auto s = star3();  // the uniform start vector is far from the principal eigenvector
    CHECK_ERRC(eigencentrality(s, 1e-10, 1), errc::no_convergence);
    CHECK_ERRC(eigencentrality(s, 0.0), errc::config_error);
}

TEST_CASE("eigencentrality argmax is stable under scaling the adjacency matrix") {
    oracle::Rng rng(15);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = oracle::random_connected_graph(12, 10, rng);
        auto ec = eigencentrality(g).values;
        size_t argmax = static_cast<size_t>(std::max_element(ec.begin(), ec.end()) - ec.begin());
        for (double scale : {0.5, 3.0}) {
            auto scaled = oracle::eigencentrality_dense(g, scale);
            size_t scaled_argmax =
                static_cast<size_t>(std::max_element(scaled.begin(), scaled.end()) - scaled.begin());
            CHECK(argmax == scaled_argmax);
        }
    }
}

TEST_CASE("all four metrics are invariant under node relabeling") {
    oracle::Rng rng(16);
    auto g = oracle::random_connected_graph(12, 8, rng);
    std::vector<int> remap;
    auto h = relabel_reversed(g, &remap);

    auto check_pair = [&](const std::vector<double>& a, const std::vector<double>& b) {
        for (int i = 0; i < g.node_count(); ++i)
            CHECK(a[static_cast<size_t>(i)] ==
                  doctest::Approx(b[static_cast<size_t>(remap[static_cast<size_t>(i)])]).epsilon(1e-9));
    };
    check_pair(degree_centrality(g).values, degree_centrality(h).values);
    check_pair(betweenness(g).values, betweenness(h).values);
    check_pair(closeness(g).values, closeness(h).values);
    check_pair(eigencentrality(g).values, eigencentrality(h).values);
}

TEST_CASE("vertex-transitive graphs score uniformly under every metric") {
    auto c5 = oracle::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto k4 = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (const auto& g : {c5, k4}) {
        for (const auto& scores :
             {degree_centrality(g).values, betweenness(g).values, closeness(g).values,
              eigencentrality(g).values}) {
            for (double v : scores) CHECK(v == doctest::Approx(scores[0]).epsilon(1e-9));
        }
    }
}

TEST_CASE("adding an edge never decreases endpoint degree centrality") {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_graph(10, 0.3, rng);
        int u = rng.next_below(10), v = rng.next_below(10);
        if (u == v) continue;
        auto edges = g.edges();
        auto before = degree_centrality(g).values;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        LayerGraph g2(g.kind(), g.nodes(), edges);
        auto after = degree_centrality(g2).values;
        CHECK(after[static_cast<size_t>(u)] >= before[static_cast<size_t>(u)]);
        CHECK(after[static_cast<size_t>(v)] >= before[static_cast<size_t>(v)]);
    }
}

TEST_CASE("ranked_table ordering and tie-breaking") {
    auto s = star3();
    auto table = ranked_table(s, 1);
    for (int m = 0; m < kMetricCount; ++m) {
        REQUIRE(table.top[static_cast<size_t>(m)].size() == 1);
        CHECK(table.top[static_cast<size_t>(m)][0].first == "n00");
    }

    auto pair = oracle::make_graph(2, {{0, 1}});
    auto tie = ranked_table(pair, 2);
    for (int m = 0; m < kMetricCount; ++m) {
        REQUIRE(tie.top[static_cast<size_t>(m)].size() == 2);
        CHECK(tie.top[static_cast<size_t>(m)][0].first == "n00");
        CHECK(tie.top[static_cast<size_t>(m)][1].first == "n01");
        CHECK(tie.top[static_cast<size_t>(m)][0].second == tie.top[static_cast<size_t>(m)][1].second);
    }

    CHECK_ERRC(ranked_table(oracle::make_graph(4, {{0, 1}, {2, 3}}), 2), errc::disconnected_graph);
    CHECK_ERRC(ranked_table(s, 0), errc::config_error);
}

TEST_CASE("fixture: top-2 table matches the brute-force oracle per metric") {
    std::ifstream in(fixture_path());
    REQUIRE(in.good());
    auto [net, _] = resolve(parse_profiles(in), DanglingPolicy::reject);
    LayerGraph g = giant_component(layer(net, EdgeKind::Alliance));
    auto table = ranked_table(g, 2);

    auto top2 = [&](const std::vector<double>& scores) {
        std::vector<std::pair<PersonId, double>> rows;
        for (int i = 0; i < g.node_count(); ++i) rows.emplace_back(g.node(i), scores[static_cast<size_t>(i)]);
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        rows.resize(2);
        return rows;
    };

    auto naive_bc = top2(oracle::betweenness_pairs(g));
    auto fast_bc = table.top[static_cast<size_t>(Metric::Betweenness)];
    CHECK(fast_bc[0].first == naive_bc[0].first);
    CHECK(fast_bc[1].first == naive_bc[1].first);
    CHECK(fast_bc[0].second == doctest::Approx(naive_bc[0].second).epsilon(1e-9));

    auto naive_cc = top2(oracle::closeness_bfs(g));
    auto fast_cc = table.top[static_cast<size_t>(Metric::Closeness)];
    CHECK(fast_cc[0].first == naive_cc[0].first);
    CHECK(fast_cc[1].first == naive_cc[1].first);

    auto dense_ec = oracle::eigencentrality_dense(g);
    auto naive_ec = top2(dense_ec);
    auto fast_ec = table.top[static_cast<size_t>(Metric::Eigenvector)];
    CHECK(fast_ec[0].first == naive_ec[0].first);
    // the runner-up spot is an exact tie among automorphic nodes; compare by value
    CHECK(dense_ec[static_cast<size_t>(g.require(fast_ec[1].first))] ==
          doctest::Approx(naive_ec[1].second).epsilon(1e-9));

    // the planted hub tops everything
    for (int m = 0; m < kMetricCount; ++m) CHECK(table.top[static_cast<size_t>(m)][0].first == "p00");
}
