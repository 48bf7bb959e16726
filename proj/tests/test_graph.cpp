#include "doctest.h"

#include <tuple>
#include <vector>

#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "support/generators.hpp"

using gspline::Int;
using gspline::WeightedGraph;

namespace {

WeightedGraph k4_fixture() {
    return gspline::make_graph(4, {{1, 2, Int(6)},
                                   {1, 3, Int(6)},
                                   {1, 4, Int(12)},
                                   {2, 3, Int(20)},
                                   {2, 4, Int(15)},
                                   {3, 4, Int(8)}});
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("construction normalizes and validates") {
    WeightedGraph g = gspline::make_graph(3, {{2, 1, Int(5)}, {3, 1, Int(7)}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges()[0].u == 1);
    CHECK(g.edges()[0].v == 2);
    CHECK(g.edges()[0].id == 1);
    CHECK(g.edges()[1].id == 2);
    CHECK(g.labels() == std::vector<std::string>{"v1", "v2", "v3"});

    CHECK_THROWS_AS(gspline::make_graph(2, {{1, 3, Int(1)}}), gspline::InvalidVertex);
    CHECK_THROWS_AS(gspline::make_graph(2, {{1, 1, Int(1)}}), gspline::DomainError);
    CHECK_THROWS_AS(gspline::make_graph(2, {{1, 2, Int(0)}}), gspline::DomainError);
    CHECK_THROWS_AS(WeightedGraph(2, {{1, 2, Int(3), 1}, {1, 2, Int(4), 1}}),
                    gspline::DomainError);
    CHECK_THROWS_AS(WeightedGraph(1, {}, {"a", "b"}), gspline::DomainError);
}

TEST_CASE("degree and star respect multiplicity") {
    WeightedGraph g = gspline::make_graph(3, {{1, 2, Int(4)}, {1, 2, Int(6)}, {2, 3, Int(5)}});
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 3);
    CHECK_FALSE(gspline::is_simple(g));

    auto star = g.star(2);
    REQUIRE(star.size() == 3);
    CHECK(star[0].neighbor == 1);
    CHECK(star[0].edge_id == 1);
    CHECK(star[1].neighbor == 1);
    CHECK(star[1].edge_id == 2);
    CHECK(star[2].neighbor == 3);

    CHECK_THROWS_AS(g.degree(4), gspline::InvalidVertex);
}

TEST_CASE("connectivity") {
    CHECK(gspline::is_connected(gspline::make_graph(1, {})));
    CHECK(gspline::is_connected(gspline::make_graph(0, {})));
    CHECK_FALSE(gspline::is_connected(gspline::make_graph(2, {})));
    CHECK(gspline::is_connected(gspline::make_graph(3, {{1, 2, Int(1)}, {2, 3, Int(1)}})));
    CHECK_FALSE(gspline::is_connected(gspline::make_graph(4, {{1, 2, Int(1)}, {3, 4, Int(1)}})));
}

TEST_CASE("simple path enumeration on K4") {
    WeightedGraph g = k4_fixture();
    auto paths = gspline::simple_paths(g, 2, 1, {});
    CHECK(paths.size() == 5);
    for (const auto& p : paths) {
        CHECK(p.vertices.front() == 2);
        CHECK(p.vertices.back() == 1);
        CHECK(p.vertices.size() == p.edge_ids.size() + 1);
    }

    // Interior filter: only vertices above 2 may appear inside, which on K4
    // keeps all five paths; interior above 3 kills the detours through v3.
    CHECK(gspline::simple_paths(g, 2, 1, [](int x) { return x > 2; }).size() == 5);
    CHECK(gspline::simple_paths(g, 3, 1, [](int x) { return x > 3; }).size() == 2);

    CHECK_THROWS_AS(gspline::simple_paths(g, 1, 1, {}), gspline::DomainError);
    CHECK_THROWS_AS(gspline::simple_paths(g, 1, 5, {}), gspline::InvalidVertex);
}

TEST_CASE("complete graph path counts grow as expected") {
    // K_n has sum_{k=0}^{n-2} (n-2)!/(n-2-k)! simple paths between any pair.
    std::vector<std::tuple<int, int, Int>> edges;
    for (int u = 1; u <= 5; ++u) {
        for (int v = u + 1; v <= 5; ++v) edges.emplace_back(u, v, Int(2));
    }
    WeightedGraph k5 = gspline::make_graph(5, edges);
    CHECK(gspline::simple_paths(k5, 1, 5, {}).size() == 16);
}

TEST_CASE("path explosion carries the limit") {
    WeightedGraph g = k4_fixture();
    try {
        gspline::simple_paths(g, 2, 1, {}, 3);
        FAIL("expected PathExplosion");
    } catch (const gspline::PathExplosion& e) {
        CHECK(e.limit == 3);
        CHECK(e.found == 3);
    }
    // Exactly at the limit is fine.
    CHECK(gspline::simple_paths(g, 2, 1, {}, 5).size() == 5);
}

TEST_CASE("multigraph paths distinguish parallel edges") {
    WeightedGraph g = gspline::make_graph(2, {{1, 2, Int(4)}, {1, 2, Int(6)}});
    auto paths = gspline::simple_paths(g, 1, 2, {});
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].edge_ids == std::vector<int>{1});
    CHECK(paths[1].edge_ids == std::vector<int>{2});
    CHECK(gspline::path_gcd(g, paths[0]) == 4);
    CHECK(gspline::path_gcd(g, paths[1]) == 6);
}

TEST_CASE("path_gcd validates the walk") {
    WeightedGraph g = k4_fixture();
    gspline::Path p;
    p.vertices = {2, 3, 1};
    p.edge_ids = {4, 2};  // (2,3) weight 20, then (1,3) weight 6
    CHECK(gspline::path_gcd(g, p) == 2);

    gspline::Path broken;
    broken.vertices = {1, 2};
    broken.edge_ids = {4};  // edge 4 joins 2 and 3, not 1 and 2
    CHECK_THROWS_AS(gspline::path_gcd(g, broken), gspline::DomainError);
}

TEST_CASE("permutation relabels consistently") {
    WeightedGraph g = k4_fixture();
    WeightedGraph p = gspline::permuted(g, {4, 3, 2, 1});
    CHECK(p.vertex_count() == 4);
    CHECK(p.labels() == std::vector<std::string>{"v4", "v3", "v2", "v1"});
    // Old edge (3,4) weight 8 becomes (1,2).
    bool found = false;
    for (const auto& e : p.edges()) {
        if (e.u == 1 && e.v == 2) {
            CHECK(e.w == 8);
            found = true;
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(gspline::permuted(g, {1, 2, 3}), gspline::DomainError);
    CHECK_THROWS_AS(gspline::permuted(g, {1, 2, 3, 3}), gspline::DomainError);

    // Identity permutation round-trips; applying the inverse restores g.
    CHECK(gspline::structurally_equal(gspline::permuted(g, {1, 2, 3, 4}), g));
    CHECK(gspline::structurally_equal(gspline::permuted(p, {4, 3, 2, 1}), g));
}

TEST_CASE("structural equality ignores edge ids") {
    WeightedGraph a = gspline::make_graph(2, {{1, 2, Int(3)}});
    WeightedGraph b(2, {{1, 2, Int(3), 9}});
    CHECK(gspline::structurally_equal(a, b));
    WeightedGraph c = gspline::make_graph(2, {{1, 2, Int(4)}});
    CHECK_FALSE(gspline::structurally_equal(a, c));
}

TEST_CASE("random graph generator honors its contract") {
    testsupport::Rng rng(107);
    for (int round = 0; round < 50; ++round) {
        auto g = testsupport::random_connected_simple(rng, 1, 6, 30);
        CHECK(gspline::is_connected(g));
        CHECK(gspline::is_simple(g));
        for (const auto& e : g.edges()) {
            CHECK(e.w >= 1);
            CHECK(e.w <= 30);
        }
    }
}

TEST_SUITE_END();
