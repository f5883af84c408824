#include <numeric>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "thk/braid.hpp"
#include "thk/intmatrix.hpp"

using namespace thk;

TEST_CASE("braid word shape") {
    BraidWord w = thk_braid_word(4, 3);
    CHECK(w.strands == 4);
    REQUIRE(w.letters.size() == 9);
    for (size_t i = 0; i < w.letters.size(); ++i) {
        int gen = (int)(i % 3) + 1;
        CHECK(w.letters[i].generator == gen);
        CHECK(w.letters[i].sign == (gen % 2 ? 1 : -1));
    }
    CHECK_THROWS_AS(thk_braid_word(1, 2), std::invalid_argument);
}

TEST_CASE("annular map faces") {
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            AnnularMap mp = AnnularMap::build(m, n);
            int fc = 0;
            auto faces = mp.face_of(&fc);
            CHECK(fc == mp.N + 2);  // Euler count for the closed diagram
            CHECK((int)faces.size() == 4 * mp.N);
        }
}

TEST_CASE("diagram construction invariants") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= 12; ++n) {
            Diagram d = build_thk(m, n);  // traversal asserts alternation internally
            CHECK(d.crossing_count() == n * (m - 1));
            CHECK(d.arc_count() == d.crossing_count());
            CHECK(d.components() == std::gcd(m, n));
            CHECK(component_count(m, n) == std::gcd(m, n));
            for (int r = 0; r < m; ++r) {
                CHECK(d.entry_arc(r) >= 0);
                CHECK(d.entry_arc(r) < d.arc_count());
            }
        }
}

TEST_CASE("propagation seed arcs distinct") {
    // the symbolic propagation seeds rows 0 and 1 with different colors, so
    // those rows must carry different arcs across the angle-0 cut
    for (int m = 3; m <= 25; m += 2) {
        Diagram d = build_thk(m, 2);
        CHECK(d.entry_arc(0) != d.entry_arc(1));
    }
}

TEST_CASE("coloring matrix structure") {
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; n <= 8; ++n) {
            Diagram d = build_thk(m, n);
            IntMatrix c = coloring_matrix(d);
            int N = d.crossing_count();
            REQUIRE((int)c.rows() == N);
            REQUIRE((int)c.cols() == N);
            for (int i = 0; i < N; ++i) {
                BigInt row_sum = 0;
                for (int j = 0; j < N; ++j) row_sum += c.at(i, j);
                CHECK(row_sum == 0);  // constant colorings are always valid
            }
        }
}

TEST_CASE("first minor independent of row and column") {
    for (auto [m, n] : {std::pair{3, 4}, {5, 2}, {4, 3}}) {
        IntMatrix c = coloring_matrix(build_thk(m, n));
        size_t N = c.rows();
        BigInt ref = abs(det_bareiss(c.minor_without(N - 1, N - 1)));
        for (auto [i, j] : {std::pair<size_t, size_t>{0, 0}, {0, N - 1}, {N / 2, N / 3}})
            CHECK(abs(det_bareiss(c.minor_without(i, j))) == ref);
    }
}

TEST_CASE("torus knots on two strands") {
    // THK(2,n) is the (2,n) torus link; for odd n its determinant is n
    for (int n = 3; n <= 11; n += 2) {
        IntMatrix c = coloring_matrix(build_thk(2, n));
        CHECK(abs(det_bareiss(c.minor_without(n - 1, n - 1))) == n);
    }
}

TEST_CASE("diagram json") {
    Diagram d = build_thk(3, 2);
    auto j = nlohmann::json::parse(diagram_json(d));
    CHECK(j["m"] == 3);
    CHECK(j["n"] == 2);
    REQUIRE(j["crossings"].size() == 4);
    for (const auto& c : j["crossings"]) {
        REQUIRE(c.size() == 3);
        for (const auto& a : c) {
            CHECK(a.get<int>() >= 0);
            CHECK(a.get<int>() < 4);
        }
    }
}

TEST_CASE("crossing signs alternate with generator parity") {
    Diagram d = build_thk(4, 2);
    for (int k = 0; k < d.crossing_count(); ++k)
        CHECK(d.positive(k) == ((k % 3) % 2 == 0));
}
