#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mplex/layout.hpp"
#include "mplex/reference.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mplex;

namespace {

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

} // namespace

TEST_CASE("initial positions live on the unit disc and depend only on the seed") {
    auto a = initial_positions(123, 50);
    auto b = initial_positions(123, 50);
    auto c = initial_positions(124, 50);
    REQUIRE(a.size() == 50);
    bool any_differs = false;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x * a[i].x + a[i].y * a[i].y <= 1.0);
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
        any_differs = any_differs || a[i].x != c[i].x;
    }
    CHECK(any_differs);
}

TEST_CASE("gravity parks a single node at the origin") {
    auto g = oracle::make_graph(1, {});
    auto result = force_layout(g, 5, 500);
    CHECK(std::hypot(result.positions[0].x, result.positions[0].y) <= 1e-3);
    CHECK(result.seed == 5);
    CHECK(result.iterations == 500);
}

TEST_CASE("two connected nodes settle symmetrically at the analytic separation") {
    auto g = oracle::make_graph(2, {{0, 1}});
    LayoutParams params;  // attraction 1, repulsion 2, gravity 0.05
    auto result = force_layout(g, 9, 2000, params);
    const Vec2 p0 = result.positions[0], p1 = result.positions[1];

    // symmetric about the origin
    CHECK(std::hypot(p0.x + p1.x, p0.y + p1.y) <= 1e-9);

    // 1-D balance: attraction*d + gravity*d/2 = repulsion*(deg+1)^2/d
    const double expected =
        std::sqrt(params.repulsion * 4.0 / (params.attraction + params.gravity / 2.0));
    CHECK(dist(p0, p1) == doctest::Approx(expected).epsilon(1e-9));

    // stable over the final ten iterations
    auto earlier = force_layout(g, 9, 1990, params);
    CHECK(std::abs(dist(p0, p1) - dist(earlier.positions[0], earlier.positions[1])) <= 1e-6);
    CHECK(dist(p0, p1) > 0.0);
}

TEST_CASE("barbell communities separate further than they spread") {
    auto g = oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    auto result = force_layout(g, 3, 500);
    auto centroid = [&](int from, int to) {
        Vec2 c;
        for (int i = from; i <= to; ++i) {
            c.x += result.positions[static_cast<size_t>(i)].x / 3.0;
            c.y += result.positions[static_cast<size_t>(i)].y / 3.0;
        }
        return c;
    };
    Vec2 left = centroid(0, 2), right = centroid(3, 5);
    double spread = 0.0;
    for (int i = 0; i <= 2; ++i) spread += dist(result.positions[static_cast<size_t>(i)], left) / 6.0;
    for (int i = 3; i <= 5; ++i) spread += dist(result.positions[static_cast<size_t>(i)], right) / 6.0;
    CHECK(dist(left, right) > 2.0 * spread);
}

TEST_CASE("identical inputs give bit-identical layouts") {
    oracle::Rng rng(61);
    auto g = oracle::random_connected_graph(20, 15, rng);
    auto a = force_layout(g, 42, 120);
    auto b = force_layout(g, 42, 120);
    for (size_t i = 0; i < a.positions.size(); ++i) {
        CHECK(a.positions[i].x == b.positions[i].x);
        CHECK(a.positions[i].y == b.positions[i].y);
    }
}

TEST_CASE("parallel layout equals the serial reference bitwise") {
    oracle::Rng rng(62);
    auto g = oracle::random_connected_graph(30, 20, rng);
    auto fast = force_layout(g, 7, 80);
    auto serial = reference::force_layout(g, 7, 80);
    for (size_t i = 0; i < fast.positions.size(); ++i) {
        CHECK(fast.positions[i].x == serial.positions[i].x);
        CHECK(fast.positions[i].y == serial.positions[i].y);
    }
}

TEST_CASE("permuting labels with permuted initial positions permutes the result") {
    // same topology twice: graph g on ids n00..n05 and h with reversed labels
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}};
    auto g = oracle::make_graph(6, edges);
    const int n = 6;
    // h: node with old index i gets id m(5-i); sorted ids reverse the index order
    std::vector<PersonId> ids;
    for (int i = 0; i < n; ++i) ids.push_back("m0" + std::to_string(i));
    std::vector<std::pair<int, int>> h_edges;
    for (auto [u, v] : edges) h_edges.emplace_back(n - 1 - u, n - 1 - v);
    LayerGraph h(EdgeKind::Work, ids, h_edges);

    auto initial = initial_positions(11, n);
    std::vector<Vec2> permuted(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) permuted[static_cast<size_t>(n - 1 - i)] = initial[static_cast<size_t>(i)];

    auto rg = force_layout_from(g, initial, 150);
    auto rh = force_layout_from(h, permuted, 150);
    // permuting relabels the force summation order, so equality holds to
    // floating-point reassociation rather than bitwise
    for (int i = 0; i < n; ++i) {
        CHECK(rg.positions[static_cast<size_t>(i)].x ==
              doctest::Approx(rh.positions[static_cast<size_t>(n - 1 - i)].x).epsilon(1e-9));
        CHECK(rg.positions[static_cast<size_t>(i)].y ==
              doctest::Approx(rh.positions[static_cast<size_t>(n - 1 - i)].y).epsilon(1e-9));
    }
}

TEST_CASE("layout argument validation") {
    auto g = oracle::make_graph(2, {{0, 1}});
    CHECK_ERRC(force_layout(g, 1, 0), errc::config_error);
    CHECK_ERRC(force_layout_from(g, std::vector<Vec2>(3), 10), errc::annotation_mismatch);
}
