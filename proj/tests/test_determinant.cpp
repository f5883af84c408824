#include <numeric>

#include "doctest.h"
#include "thk/determinant.hpp"
#include "thk/graphs.hpp"
#include "thk/numbertheory.hpp"
#include "thk/sequences.hpp"

using namespace thk;

TEST_CASE("two-column determinants are Pell numbers") {
    for (int m = 3; m <= 15; m += 2) {
        Diagram d = build_thk(m, 2);
        DeterminantResult r = knot_determinant(d);
        CHECK(r.value == pell((unsigned)m));
        CHECK(r.method == DetMethod::coloring_minor);
        CHECK(spanning_tree_count(build_checkerboard(d)) == pell((unsigned)m));
    }
}

TEST_CASE("three-strand closed form") {
    for (int n = 2; n <= 12; ++n) {
        BigInt want = lucas(2 * (unsigned)n) - 2;
        CHECK(det_closed_form_m3(n) == want);
        CHECK(knot_determinant(build_thk(3, n)).value == want);
    }
    CHECK_THROWS_AS(det_closed_form_m3(1), std::invalid_argument);
}

TEST_CASE("parity factorization for three strands") {
    // odd n: L_n^2; even n: 5 F_n^2
    CHECK(det_closed_form_m3(5) == lucas(5) * lucas(5));          // 121 = 11^2
    CHECK(det_closed_form_m3(4) == 5 * fibonacci(4) * fibonacci(4));  // 45 = 5*9
    for (int n : {4, 5, 7, 8, 10, 11, 13}) {  // coprime to 3, large enough to be composite
        CompositeWitness w = composite_determinant_check(3, n);
        CHECK(w.composite);
        BigInt prod = 1;
        for (const auto& f : w.factors) prod *= f;
        CHECK(prod == w.det);
        CHECK(classify_prime(w.det).status == PrimeStatus::composite);
    }
}

TEST_CASE("even strand determinants are multiples of n") {
    for (int m : {4, 6, 8})
        for (int n = 3; n <= 9; ++n) {
            if (std::gcd(m, n) != 1) continue;
            BigInt det = knot_determinant(build_thk(m, n)).value;
            CHECK(det % n == 0);
            CompositeWitness w = composite_determinant_check(m, n);
            CHECK(w.composite);
            BigInt prod = 1;
            for (const auto& f : w.factors) prod *= f;
            CHECK(prod == det);
            CHECK(w.factors.front() == n);
        }
}

TEST_CASE("trigonometric product matches exact counts") {
    for (int m : {4, 6, 8})
        for (int n = 3; n <= 9; ++n) {
            BigInt exact = knot_determinant(build_thk(m, n)).value;
            CHECK(trig_count(m, n) == exact);
        }
    CHECK_THROWS_AS(trig_count(5, 4), std::invalid_argument);  // odd m has no product form
    CHECK_THROWS_AS(trig_count(4, 2), std::invalid_argument);
}

TEST_CASE("composite check preconditions") {
    CHECK_THROWS_AS(composite_determinant_check(5, 4), std::invalid_argument);  // odd m != 3
    CHECK_THROWS_AS(composite_determinant_check(4, 2), std::invalid_argument);  // n < 3 for even m
    CHECK_THROWS_AS(composite_determinant_check(4, 6), std::invalid_argument);  // gcd > 1
}

TEST_CASE("method names") {
    CHECK(std::string(det_method_name(DetMethod::coloring_minor)) == "coloring-minor");
    CHECK(std::string(det_method_name(DetMethod::matrix_tree)) == "matrix-tree");
    CHECK(std::string(det_method_name(DetMethod::closed_form)) == "closed-form");
    CHECK(std::string(det_method_name(DetMethod::trig_product)) == "trig-product");
}
