#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "resolvedim/distance.hpp"
#include "resolvedim/errors.hpp"
#include "resolvedim/graph.hpp"
#include "resolvedim/graph_io.hpp"
#include "test_util.hpp"

using namespace resolvedim;

TEST_CASE("from_edge_list normalizes and validates") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(2, 0));

    Graph p2 = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
    CHECK(p2.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 0}}), SelfLoopError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), IndexOutOfRangeError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 2}}), IndexOutOfRangeError);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), IndexOutOfRangeError);
}

TEST_CASE("adjacency is symmetric and sorted") {
    Graph g = Graph::from_edge_list(5, {{3, 1}, {0, 3}, {4, 0}, {2, 4}});
    for (int u = 0; u < 5; ++u) {
        auto nb = g.neighbors(u);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (int v : nb)
            CHECK(g.has_edge(v, u));
    }
}

// "Bw" and "Bg" were encoded by hand from the graph6 bit layout:
// n=3 -> 'B'; upper-triangle bits in column-major order (0,1),(0,2),(1,2)
// padded to 111000 -> 'w' for K3 and 101000 -> 'g' for the path 0-1-2.
TEST_CASE("graph6 decodes hand-encoded strings") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3 == testutil::make_complete(3));

    Graph p3 = parse_graph6("Bg");
    CHECK(p3 == Graph::from_edge_list(3, {{0, 1}, {1, 2}}));

    CHECK(to_graph6(testutil::make_complete(3)) == "Bw");
    CHECK(to_graph6(p3) == "Bg");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedHeaderError);
    CHECK_THROWS_AS(parse_graph6("\x01w"), MalformedHeaderError);
    CHECK_THROWS_AS(parse_graph6("B"), TruncatedBitstreamError);
    CHECK_THROWS_AS(parse_graph6("Bww"), MalformedHeaderError);
    CHECK_THROWS_AS(parse_graph6("?"), MalformedHeaderError); // n = 0
    CHECK_THROWS_AS(parse_graph6("~??"), TooLargeError);      // multi-byte header
    CHECK_THROWS_AS(to_graph6(testutil::make_path(63)), TooLargeError);
}

TEST_CASE("graph6 accepts the standard prefix and trailing newline") {
    CHECK(parse_graph6(">>graph6<<Bw\n") == testutil::make_complete(3));
}

TEST_CASE("graph6 round-trips random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> size(1, 40);
        const int n = size(rng);
        std::vector<std::pair<int, int>> edges;
        std::bernoulli_distribution coin(0.3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        const std::string encoded = to_graph6(g);
        CHECK(parse_graph6(encoded) == g);
        CHECK(to_graph6(parse_graph6(encoded)) == encoded);
    }
}

TEST_CASE("edge-list text round-trips and skips comments") {
    const char* text = "# sample\n4\n0 1\n\n1 2\n# trailing comment\n2 3\n";
    Graph g = parse_edge_list_text(text);
    CHECK(g == testutil::make_path(4));
    CHECK(parse_edge_list_text(to_edge_list_text(g)) == g);

    CHECK_THROWS_AS(parse_edge_list_text(""), MalformedHeaderError);
    CHECK_THROWS_AS(parse_edge_list_text("3\n0 1 2\n"), MalformedHeaderError);
    CHECK_THROWS_AS(parse_edge_list_text("2\n0\n"), MalformedHeaderError);
    CHECK_THROWS_AS(parse_edge_list_text("3\n0 3\n"), IndexOutOfRangeError);
}

TEST_CASE("distance matrix on C5 and a hand-built grid") {
    DistanceMatrix dm = distance_matrix(testutil::make_cycle(5));
    CHECK(dm.at(0, 2) == 2);
    CHECK(dm.at(0, 3) == 2);
    CHECK(dm.at(0, 1) == 1);

    const int l = 3;
    DistanceMatrix grid = distance_matrix(testutil::make_grid(l));
    for (int x1 = 0; x1 < l; ++x1)
        for (int x2 = 0; x2 < l; ++x2)
            for (int y1 = 0; y1 < l; ++y1)
                for (int y2 = 0; y2 < l; ++y2)
                    CHECK(grid.at(x1 * l + x2, y1 * l + y2) ==
                          std::abs(x1 - y1) + std::abs(x2 - y2));
    CHECK(grid.at(0, 8) == 4); // (0,0) to (2,2)
}

TEST_CASE("disconnected graphs get infinity sentinels") {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    DistanceMatrix dm = distance_matrix(g);
    CHECK_FALSE(dm.connected());
    CHECK(dm.at(0, 2) == kInfiniteDistance);
    CHECK(dm.at(1, 3) == kInfiniteDistance);
    CHECK(dm.at(0, 1) == 1);
    CHECK_THROWS_AS(diameter(dm), DisconnectedError);
    CHECK_THROWS_AS(eccentricity(dm, 0), DisconnectedError);
    CHECK_THROWS_AS(neighborhood_shells(dm, 0), DisconnectedError);
}

TEST_CASE("diameter and eccentricity") {
    CHECK(diameter(distance_matrix(testutil::make_complete(4))) == 1);
    DistanceMatrix p5 = distance_matrix(testutil::make_path(5));
    CHECK(diameter(p5) == 4);
    CHECK(eccentricity(p5, 2) == 2);
}

TEST_CASE("girth") {
    CHECK(girth(testutil::make_cycle(6)) == 6);
    CHECK(girth(testutil::make_cycle(5)) == 5);
    CHECK(girth(testutil::make_complete(4)) == 3);
    CHECK_FALSE(girth(testutil::make_path(4)).has_value());
    CHECK_FALSE(girth(Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).has_value());
    // Two disjoint cycles: the shorter one wins.
    Graph two = Graph::from_edge_list(9, {{0, 1}, {1, 2}, {2, 0},
                                          {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 3}});
    CHECK(girth(two) == 3);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Graph::from_edge_list(1, {})));
    CHECK(is_connected(testutil::make_path(3)));
    CHECK_FALSE(is_connected(Graph::from_edge_list(2, {})));
}

TEST_CASE("neighborhood shells") {
    auto sizes = [](const std::vector<std::vector<int>>& shells) {
        std::vector<int> out;
        for (const auto& shell : shells)
            out.push_back(static_cast<int>(shell.size()));
        return out;
    };
    CHECK(sizes(neighborhood_shells(distance_matrix(testutil::make_complete(4)), 0)) ==
          std::vector<int>{1, 3});
    CHECK(sizes(neighborhood_shells(distance_matrix(testutil::make_cycle(5)), 2)) ==
          std::vector<int>{1, 2, 2});
    CHECK(sizes(neighborhood_shells(distance_matrix(testutil::make_cycle(7)), 0)) ==
          std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("distance invariants on random connected graphs") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> size(2, 12);
        const int n = size(rng);
        Graph g = testutil::random_connected_graph(rng, n, 0.25);
        DistanceMatrix dm = distance_matrix(g);
        REQUIRE(dm.connected());

        for (int u = 0; u < n; ++u) {
            CHECK(dm.at(u, u) == 0);
            CHECK(eccentricity(dm, u) == *std::max_element(dm.dist.begin() + u * n,
                                                           dm.dist.begin() + (u + 1) * n));
            for (int v = 0; v < n; ++v) {
                CHECK(dm.at(u, v) == dm.at(v, u));
                for (int w = 0; w < n; ++w)
                    CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
            }
        }

        // Distances across an edge differ by at most one.
        for (auto [v, w] : g.edges())
            for (int u = 0; u < n; ++u)
                CHECK(std::abs(dm.at(u, v) - dm.at(u, w)) <= 1);

        // Shells partition V by distance.
        for (int u = 0; u < n; ++u) {
            auto shells = neighborhood_shells(dm, u);
            size_t total = 0;
            for (size_t i = 0; i < shells.size(); ++i) {
                total += shells[i].size();
                for (int v : shells[i])
                    CHECK(dm.at(u, v) == static_cast<int>(i));
            }
            CHECK(total == static_cast<size_t>(n));
        }

        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}
