#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "thk/graphs.hpp"
#include "thk/sequences.hpp"

using namespace thk;

namespace {
CheckerboardGraph make(int verts, std::vector<std::pair<int, int>> edges) {
    CheckerboardGraph g;
    g.vertex_count = verts;
    g.edges = std::move(edges);
    return g;
}
}  // namespace

TEST_CASE("spanning trees of small graphs") {
    CHECK(spanning_tree_count(make(1, {})) == 1);
    CHECK(spanning_tree_count(make(2, {{0, 1}})) == 1);
    CHECK(spanning_tree_count(make(2, {{0, 1}, {0, 1}})) == 2);  // doubled edge
    CHECK(spanning_tree_count(make(3, {{0, 1}, {1, 2}, {2, 0}})) == 3);
    CHECK(spanning_tree_count(make(3, {{0, 1}, {1, 2}})) == 1);  // a tree
    // disconnected input means a bug upstream; refused rather than counted as 0
    CHECK_THROWS(spanning_tree_count(make(4, {{0, 1}, {2, 3}})));
    CHECK(spanning_trees_bruteforce(make(4, {{0, 1}, {2, 3}})) == 0);
    // K_4: Cayley's formula gives 4^2
    CHECK(spanning_tree_count(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 16);
    // loops contribute nothing
    CHECK(spanning_tree_count(make(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}})) == 3);
}

TEST_CASE("deletion-contraction agrees with Matrix-Tree") {
    std::vector<CheckerboardGraph> cases = {
        make(3, {{0, 1}, {1, 2}, {2, 0}}),
        make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
        make(2, {{0, 1}, {0, 1}, {0, 1}}),
        build_wheel(5),
        build_wheel(7),
        build_tensor(4, 4),
    };
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 5; ++n)
            if (n * (m - 1) <= 20) cases.push_back(build_checkerboard(build_thk(m, n)));
    for (const auto& g : cases) {
        REQUIRE(g.edges.size() <= 20);
        CHECK(spanning_trees_bruteforce(g) == spanning_tree_count(g));
    }
    CHECK_THROWS(spanning_trees_bruteforce(build_tensor(6, 8)));  // too many edges
}

TEST_CASE("wheel spanning trees follow Lucas numbers") {
    for (int n = 3; n <= 12; ++n)
        CHECK(spanning_tree_count(build_wheel(n)) == lucas(2 * (unsigned)n) - 2);
}

TEST_CASE("checkerboard graphs of THK(3,n) are wheels") {
    for (int n : {4, 5, 7}) {
        CheckerboardGraph g = build_checkerboard(build_thk(3, n));
        CHECK(g.vertex_count == n + 1);
        CHECK(g.edges.size() == (size_t)2 * n);
        CHECK(graphs_isomorphic(g, build_wheel(n)));
    }
}

TEST_CASE("both shadings count the same trees") {
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; n <= 8; ++n) {
            auto [a, b] = checkerboard_shadings(build_thk(m, n));
            CHECK(a.vertex_count + b.vertex_count == n * (m - 1) + 2);
            CHECK(a.edges.size() == (size_t)(n * (m - 1)));
            CHECK(b.edges.size() == (size_t)(n * (m - 1)));
            CHECK(spanning_tree_count(a) == spanning_tree_count(b));
            CheckerboardGraph chosen = build_checkerboard(build_thk(m, n));
            CHECK(chosen.vertex_count == std::min(a.vertex_count, b.vertex_count));
        }
}

TEST_CASE("tensor graph matches even-strand checkerboards") {
    // for even m one shading of THK(m,n) is the cycle-path product, so the
    // tree counts agree (either shading gives the determinant)
    for (int m : {4, 6})
        for (int n = 3; n <= 6; ++n) {
            CheckerboardGraph t = build_tensor(m, n);
            CHECK(t.vertex_count == n * m / 2);
            CHECK(t.edges.size() == (size_t)(n * (m - 1)));
            CHECK(spanning_tree_count(t) ==
                  spanning_tree_count(build_checkerboard(build_thk(m, n))));
        }
    CHECK_THROWS_AS(build_tensor(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_tensor(4, 2), std::invalid_argument);
}

TEST_CASE("isomorphism checks") {
    CheckerboardGraph w4 = build_wheel(4);
    // relabel vertices of the wheel
    CheckerboardGraph r = w4;
    for (auto& e : r.edges) {
        e.first = (e.first + 2) % 5;
        e.second = (e.second + 2) % 5;
    }
    CHECK(graphs_isomorphic(w4, r));
    CHECK_FALSE(graphs_isomorphic(w4, build_wheel(5)));
    // multiplicity matters
    CHECK_FALSE(graphs_isomorphic(make(2, {{0, 1}, {0, 1}}), make(2, {{0, 1}})));
    CHECK(graphs_isomorphic(make(2, {{0, 1}, {1, 0}}), make(2, {{0, 1}, {0, 1}})));
}

TEST_CASE("graph json") {
    auto j = nlohmann::json::parse(graph_json(make(3, {{0, 1}, {1, 2}})));
    CHECK(j["vertex_count"] == 3);
    REQUIRE(j["edges"].size() == 2);
    CHECK(j["edges"][0][0] == 0);
    CHECK(j["edges"][0][1] == 1);
}
