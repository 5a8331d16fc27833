#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumgraph/constructions.hpp"
#include "sumgraph/graph.hpp"

using namespace sumgraph;

TEST_CASE("build_graph validates strictly") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(2, 0));

    CHECK_THROWS_WITH_AS(Graph::build(4, {{0, 0}}), "loop at vertex 0",
                         GraphError);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}, {1, 0}}), GraphError);  // dup
    CHECK_THROWS_AS(Graph::build(2, {{0, 5}}), GraphError);
    CHECK_THROWS_AS(Graph::build(kMaxVertices + 1, {}), GraphError);
}

TEST_CASE("n=0 and n=1 edge cases") {
    Graph one = Graph::build(1, {});
    CHECK(is_connected(one));
    CHECK(regular_degree(one) == 0);
    CHECK(diameter(one) == 0);
    CHECK_THROWS_AS(regular_degree(Graph::build(0, {})), GraphError);
}

TEST_CASE("edge list parse examples") {
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(p3 == path(3));

    CHECK(serialize_edge_list(complete(3)) == "3 3\n0 1\n0 2\n1 2\n");

    CHECK_THROWS_WITH_AS(parse_edge_list("3 5\n0 1\n"),
                         "edge count mismatch: header says 5, got 1",
                         GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n0 1\n"), GraphError);  // unsorted
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 0\n"), GraphError);  // u >= v
    CHECK_THROWS_AS(parse_edge_list("bogus\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\nextra\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1"), GraphError);  // no final LF
}

TEST_CASE("parse round-trips serialize") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracles::random_graph(1 + int(rng() % 24), 0.3, rng);
        CHECK(parse_edge_list(serialize_edge_list(g)) == g);
    }
    CHECK(parse_edge_list(serialize_edge_list(gdm(3, 4))) == gdm(3, 4));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete(3)));
    CHECK(is_connected(cycle(8)));
    CHECK_FALSE(is_connected(Graph::build(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("degrees") {
    CHECK(regular_degree(cycle(8)) == 2);
    Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(regular_degree(star) == std::nullopt);
    CHECK(min_degree(star) == 1);
    CHECK(regular_degree(gdm(3, 4)) == 3);
}

TEST_CASE("distances and diameter") {
    auto table = all_pairs_distances(cycle(8));
    CHECK(table.at(0, 4) == 4);
    CHECK(table.at(0, 0) == 0);
    CHECK(diameter(cycle(8)) == 4);
    CHECK(diameter(complete(4)) == 1);
    CHECK(diameter(path(5)) == 4);

    Graph two = Graph::build(4, {{0, 1}, {2, 3}});
    auto t2 = all_pairs_distances(two);
    CHECK(t2.at(0, 2) == kUnreachable);
    CHECK_THROWS_WITH_AS(diameter(two), "infinite diameter", GraphError);
}

TEST_CASE("all-pairs table agrees with single-source BFS on random graphs") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 100) {
        Graph g = oracles::random_graph(2 + int(rng() % 30), 0.2, rng);
        auto table = all_pairs_distances(g);
        int v = int(rng() % uint64_t(g.vertex_count()));
        auto row = bfs_distances(g, v);
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(table.at(v, u) == row[u]);
            CHECK(table.at(v, u) == table.at(u, v));
        }
        ++checked;
    }
}

TEST_CASE("triangle inequality on reachable pairs") {
    std::mt19937_64 rng(13);
    Graph g = oracles::random_graph(20, 0.15, rng);
    auto t = all_pairs_distances(g);
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b)
            for (int c = 0; c < 20; ++c)
                if (t.reachable(a, b) && t.reachable(b, c))
                    CHECK(t.at(a, c) <= t.at(a, b) + t.at(b, c));
}
