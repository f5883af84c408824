#include <vector>

#include "doctest.h"
#include "thk/sequences.hpp"

using namespace thk;

TEST_CASE("pell numbers") {
    long want[] = {1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741, 13860, 33461};
    for (unsigned k = 1; k <= 13; ++k) CHECK(pell(k) == want[k - 1]);
    for (unsigned k = 3; k <= 60; ++k) CHECK(pell(k) == 2 * pell(k - 1) + pell(k - 2));
    CHECK_THROWS(pell(0));
}

TEST_CASE("lucas and fibonacci") {
    long lw[] = {2, 1, 3, 4, 7, 11, 18, 29, 47};
    for (unsigned k = 0; k <= 8; ++k) CHECK(lucas(k) == lw[k]);
    long fw[] = {1, 1, 2, 3, 5, 8, 13, 21};
    for (unsigned k = 1; k <= 8; ++k) CHECK(fibonacci(k) == fw[k - 1]);
    // L_{2n} = L_n^2 - 2(-1)^n, the identity behind the determinant split
    for (unsigned n = 1; n <= 30; ++n)
        CHECK(lucas(2 * n) == lucas(n) * lucas(n) - 2 * (n % 2 ? -1 : 1));
    CHECK_THROWS(fibonacci(0));
}

TEST_CASE("centered Delannoy triangle rows") {
    std::vector<std::vector<long>> rows = {
        {1},
        {1, 1},
        {1, 3, 1},
        {1, 5, 5, 1},
        {1, 7, 13, 7, 1},
        {1, 9, 25, 25, 9, 1},
        {1, 11, 41, 63, 41, 11, 1},
    };
    for (unsigned i = 0; i < rows.size(); ++i) {
        auto r = delannoy_row(i);
        REQUIRE(r.size() == i + 1);
        for (unsigned k = 0; k <= i; ++k) CHECK(r[k] == rows[i][k]);
    }
    // the 13 in row 4 is the sum of the three entries above it: 5, 5, 3
    CHECK(delannoy(4, 2) == delannoy(3, 1) + delannoy(3, 2) + delannoy(2, 1));
}

TEST_CASE("Delannoy symmetry and boundary") {
    for (unsigned i = 0; i <= 20; ++i) {
        CHECK(delannoy(i, 0) == 1);
        CHECK(delannoy(i, i) == 1);
        for (unsigned k = 0; k <= i; ++k) CHECK(delannoy(i, k) == delannoy(i, i - k));
    }
    CHECK(delannoy(3, 4) == 0);  // out of range
    for (unsigned i = 2; i <= 15; ++i) CHECK(delannoy(i, 1) == 2 * i - 1);
}

TEST_CASE("offset sequence S") {
    long want[] = {1, 3, 8, 20, 49, 119, 288};
    for (unsigned k = 1; k <= 7; ++k) CHECK(offset_s(k) == want[k - 1]);
    for (unsigned k = 3; k <= 50; ++k)
        CHECK(offset_s(k) == 2 * offset_s(k - 1) + offset_s(k - 2) + 1);
    // closed form through Pell numbers: S_k = (P_k + P_{k+1} - 1) / 2
    for (unsigned k = 1; k <= 50; ++k) CHECK(2 * offset_s(k) == pell(k) + pell(k + 1) - 1);
}
