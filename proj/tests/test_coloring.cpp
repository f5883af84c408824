#include <numeric>

#include "doctest.h"
#include "thk/braid.hpp"
#include "thk/coloring.hpp"
#include "thk/determinant.hpp"
#include "thk/sequences.hpp"

using namespace thk;

TEST_CASE("nullspace dimensions track the determinant") {
    Diagram d = build_thk(3, 2);  // determinant 5
    IntMatrix c = coloring_matrix(d);
    CHECK(nullspace_mod_p(c, 5).dimension == 2);
    CHECK(nullspace_mod_p(c, 3).dimension == 1);
    CHECK(nullspace_mod_p(c, 7).dimension == 1);
    CHECK_THROWS_AS(nullspace_mod_p(c, 6), std::invalid_argument);  // p must be prime

    // kernel vectors are actual colorings
    auto ns = nullspace_mod_p(c, 5);
    for (const auto& v : ns.basis)
        for (size_t i = 0; i < c.rows(); ++i) {
            BigInt s = 0;
            for (size_t j = 0; j < c.cols(); ++j) s += c.at(i, j) * BigInt((long)v[j]);
            CHECK(s % 5 == 0);
        }
}

TEST_CASE("figure-eight heterogeneity") {
    HKVerdict v = hk_verify(build_thk(3, 2), 5);
    CHECK(v.p == 5);
    CHECK(v.nullspace_dimension == 2);
    CHECK(v.colorings_checked == 4);
    CHECK(v.complete);
    CHECK(v.heterogeneous);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("five strand two column heterogeneity") {
    HKVerdict v = hk_verify(build_thk(5, 2), 29);
    CHECK(v.colorings_checked == 28);
    CHECK(v.heterogeneous);
}

TEST_CASE("pigeonhole repeats produce witnesses") {
    // THK(3,4) has 8 arcs and determinant 45; with only 5 colors available
    // every coloring must repeat one
    Diagram d = build_thk(3, 4);
    HKVerdict v = hk_verify(d, 5);
    CHECK_FALSE(v.heterogeneous);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->arc_a != v.witness->arc_b);
    CHECK(v.witness->arc_a >= 0);
    CHECK(v.witness->arc_b < d.arc_count());
    CHECK(v.witness->color < 5);
    CHECK(v.witness->class_index >= 1);
}

TEST_CASE("enumeration cap") {
    HKOptions opt;
    opt.cap = 10;
    HKVerdict v = hk_verify(build_thk(13, 2), 33461, opt);
    CHECK_FALSE(v.complete);
    CHECK(v.colorings_checked == 10);
}

TEST_CASE("not colorable throws") {
    CHECK_THROWS_AS(hk_verify(build_thk(3, 2), 3), std::invalid_argument);
}

TEST_CASE("serial and parallel agree") {
    Diagram d = build_thk(3, 4);  // has witnesses, so ordering matters
    HKOptions s, p;
    s.threads = 1;
    p.threads = 4;
    HKVerdict vs = hk_verify(d, 5, s), vp = hk_verify(d, 5, p);
    CHECK(vs.heterogeneous == vp.heterogeneous);
    CHECK(vs.colorings_checked == vp.colorings_checked);
    REQUIRE(vs.witness.has_value());
    REQUIRE(vp.witness.has_value());
    // deterministic witness: smallest class index regardless of thread count
    CHECK(vs.witness->class_index == vp.witness->class_index);
    CHECK(vs.witness->arc_a == vp.witness->arc_a);
    CHECK(vs.witness->arc_b == vp.witness->arc_b);
    CHECK(vs.witness->color == vp.witness->color);
}

TEST_CASE("symbolic propagation yields valid colorings") {
    for (int m = 3; m <= 15; m += 2) {
        std::vector<BigInt> coef = thk_m2_propagation(m);
        Diagram d = build_thk(m, 2);
        IntMatrix c = coloring_matrix(d);
        REQUIRE(coef.size() == c.cols());
        BigInt pm = pell((unsigned)m);
        // M * coef = 0 mod P_m: scaling any unit a keeps it a coloring
        for (size_t i = 0; i < c.rows(); ++i) {
            BigInt s = 0;
            for (size_t j = 0; j < c.cols(); ++j) s += c.at(i, j) * coef[j];
            CHECK(s % pm == 0);
        }
        // coefficients are nontrivial (arcs 0 and 1 differ by construction)
        bool nontrivial = false;
        for (const auto& v : coef) nontrivial = nontrivial || v != coef[0];
        CHECK(nontrivial);
    }
}

TEST_CASE("propagation coefficients are the offset sequence") {
    for (int m = 5; m <= 21; m += 2) {
        std::vector<BigInt> s = thk_m2_coefficients(m);
        REQUIRE((int)s.size() == m - 2);
        for (int k = 1; k <= m - 2; ++k) CHECK(s[k - 1] == offset_s((unsigned)k));
    }
}

TEST_CASE("coefficient bound against Pell") {
    for (int m = 5; m <= 25; m += 2) CHECK(bound_check(m));
}

TEST_CASE("scaling preserves heterogeneity") {
    Diagram d = build_thk(5, 2);
    for (std::uint64_t a = 2; a <= 28; ++a) CHECK(scaling_heterogeneity(d, 29, a));
    Diagram f8 = build_thk(3, 2);
    for (std::uint64_t a = 2; a <= 4; ++a) CHECK(scaling_heterogeneity(f8, 5, a));
    CHECK_THROWS_AS(scaling_heterogeneity(f8, 5, 10), std::invalid_argument);  // a = 0 mod p
}
