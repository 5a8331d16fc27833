#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumgraph/checks.hpp"
#include "sumgraph/constructions.hpp"
#include "sumgraph/diagnostics.hpp"
#include "sumgraph/power.hpp"

using namespace sumgraph;

namespace {
constexpr double kEps1 = 0.2956;
}

TEST_CASE("excess neighbors") {
    CHECK(excess_neighbors(cycle(8), 0) == std::vector<int>{2, 6});
    CHECK(excess_neighbors(complete(4), 0).empty());
    CHECK(excess_neighbors(path(4), 0) == std::vector<int>{2});
    CHECK_THROWS_AS(excess_neighbors(path(4), 9), GraphError);
}

TEST_CASE("V1 membership") {
    CHECK(v1_membership(complete(4), 0.01).size() == 4);
    CHECK(v1_membership(cycle(8), kEps1).empty());  // |T_v| = 2 >= 0.59

    // G_{3,4}: every vertex has at least two distance-2 vertices, so with
    // eps1*d < 1 nothing qualifies.
    Graph g = gdm(3, 4);
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(excess_neighbors(g, v).size() >= 2);
    CHECK(v1_membership(g, kEps1).empty());

    CHECK_THROWS_AS(v1_membership(path(4), kEps1), GraphError);
}

TEST_CASE("vertex decomposition on C_8") {
    auto dec = vertex_decomposition(cycle(8), 0, kEps1);
    CHECK(dec.A == std::vector<int>{1, 7});
    CHECK(dec.C == std::vector<int>{2, 6});
    CHECK(dec.D == std::vector<int>{3, 4, 5});
    CHECK(dec.scriptC == std::vector<int>{2, 6});
    REQUIRE(dec.alpha.has_value());
    CHECK(*dec.alpha == doctest::Approx((1 - kEps1) / 2).epsilon(1e-9));
    CHECK(dec.case_tag == CaseTag::kCase1);
    CHECK_FALSE(dec.extended_semantics);
}

TEST_CASE("vertex decomposition saturated on K_4") {
    auto dec = vertex_decomposition(complete(4), 0, kEps1);
    CHECK(dec.A == std::vector<int>{1, 2, 3});
    CHECK(dec.C.empty());
    CHECK(dec.D.empty());
    CHECK(dec.case_tag == CaseTag::kSaturated);
}

TEST_CASE("vertex decomposition extended semantics on path(4)") {
    auto dec = vertex_decomposition(path(4), 0, kEps1);
    CHECK(dec.A == std::vector<int>{1});
    CHECK(dec.C == std::vector<int>{2});
    CHECK(dec.D == std::vector<int>{3});
    CHECK(dec.extended_semantics);  // d falls back to min degree 1
    REQUIRE(dec.alpha.has_value());
    CHECK(*dec.alpha == doctest::Approx(1 - kEps1).epsilon(1e-9));
    CHECK(dec.case_tag == CaseTag::kCase2);
}

TEST_CASE("decomposition partitions the vertex set") {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 40) {
        Graph g = oracles::random_graph(3 + int(rng() % 14), 0.35, rng);
        if (!is_connected(g)) continue;
        ++done;
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto dec = vertex_decomposition(g, v, kEps1);
            std::vector<int> all{v};
            all.insert(all.end(), dec.A.begin(), dec.A.end());
            all.insert(all.end(), dec.C.begin(), dec.C.end());
            all.insert(all.end(), dec.D.begin(), dec.D.end());
            std::sort(all.begin(), all.end());
            std::vector<int> want(g.vertex_count());
            std::iota(want.begin(), want.end(), 0);
            CHECK(all == want);

            auto dist = bfs_distances(g, v);
            for (int c : dec.C) CHECK(dist[c] == 2);
            for (int x : dec.D) CHECK(dist[x] >= 3);
            // C is the distance-2 set T_v.
            CHECK(dec.C == excess_neighbors(g, v));
        }
    }
}

TEST_CASE("sum of |T_v| equals twice the 2-excess") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(2 + int(rng() % 20), 0.25, rng);
        long sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            sum += long(excess_neighbors(g, v).size());
        CHECK(sum == 2 * edge_growth(g, 2).rows[1].excess);
    }
}

TEST_CASE("geodesic cut on C_8") {
    auto cut = geodesic_cut(cycle(8));
    CHECK(cut.u == 0);
    CHECK(cut.w == 4);
    CHECK(cut.path.size() == 5);
    CHECK(cut.B == std::vector<int>{5, 6, 7});
    CHECK(cut.eAB == 2);
    CHECK(cut.lower == 2);  // 5*(2-2)+2
    CHECK(cut.upper == 9);
}

TEST_CASE("geodesic cut on path(5) has empty B") {
    auto cut = geodesic_cut(path(5));
    CHECK(cut.u == 0);
    CHECK(cut.w == 4);
    CHECK(cut.B.empty());
    CHECK(cut.eAB == 0);
    CHECK(cut.lower == -3);  // 5*(1-2)+2
    CHECK(cut.upper == 0);
}

TEST_CASE("geodesic cut on K_4 is tight on both sides") {
    auto cut = geodesic_cut(complete(4));
    CHECK(cut.u == 0);
    CHECK(cut.w == 1);
    CHECK(cut.B == std::vector<int>{2, 3});
    CHECK(cut.eAB == 4);
    CHECK(cut.lower == 4);  // 2*1+2
    CHECK(cut.upper == 6);
}

TEST_CASE("geodesic cut bounds and chordless path on random graphs") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 60) {
        Graph g = oracles::random_graph(2 + int(rng() % 18), 0.3, rng);
        if (!is_connected(g)) continue;
        ++done;
        auto cut = geodesic_cut(g);
        CHECK(cut.eAB <= cut.upper);
        CHECK(cut.eAB >= cut.lower);
        // Geodesics are chordless.
        for (size_t i = 0; i < cut.path.size(); ++i)
            for (size_t j = i + 2; j < cut.path.size(); ++j)
                CHECK_FALSE(g.has_edge(cut.path[i], cut.path[j]));
        // And really a shortest path between a diametral pair.
        CHECK(int(cut.path.size()) == diameter(g) + 1);
    }
    CHECK_THROWS_AS(geodesic_cut(Graph::build(4, {{0, 1}, {2, 3}})), GraphError);
    CHECK_THROWS_AS(geodesic_cut(Graph::build(1, {})), GraphError);
}

TEST_CASE("default eps1 comes from the epsilon bracket") {
    auto eps = epsilon_star(1e-12);
    CHECK(eps.eps1() == doctest::Approx(0.2956).epsilon(1e-3));
}
