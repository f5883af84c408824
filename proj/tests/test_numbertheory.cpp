#include <vector>

#include "doctest.h"
#include "thk/numbertheory.hpp"
#include "thk/sequences.hpp"

using namespace thk;

TEST_CASE("small and edge values") {
    CHECK(classify_prime(0).status == PrimeStatus::composite);
    auto one = classify_prime(1);
    CHECK(one.status == PrimeStatus::composite);
    CHECK(one.witness_kind == WitnessKind::unit);
    CHECK(classify_prime(2).status == PrimeStatus::prime);
    CHECK(classify_prime(3).status == PrimeStatus::prime);
    auto four = classify_prime(4);
    CHECK(four.status == PrimeStatus::composite);
    CHECK(four.witness == 2);
    CHECK_THROWS_AS(classify_prime(-5), std::invalid_argument);
}

TEST_CASE("pell determinants classified") {
    CHECK(classify_prime(5).status == PrimeStatus::prime);
    CHECK(classify_prime(29).status == PrimeStatus::prime);
    CHECK(classify_prime(5741).status == PrimeStatus::prime);
    CHECK(classify_prime(33461).status == PrimeStatus::prime);
    auto v169 = classify_prime(169);  // P_7 = 13^2
    CHECK(v169.status == PrimeStatus::composite);
    CHECK(v169.witness_kind == WitnessKind::factor);
    CHECK(v169.witness == 13);
}

TEST_CASE("witnesses are verifiable") {
    std::vector<BigInt> vals = {169, 408, 985, 2378, 13860, BigInt("6369316864"),
                                BigInt("167999155129"), BigInt("1000006000009")};
    for (const auto& v : vals) {
        auto pv = classify_prime(v);
        REQUIRE(pv.status == PrimeStatus::composite);
        if (pv.witness_kind == WitnessKind::factor) {
            CHECK(pv.witness > 1);
            CHECK(pv.witness < v);
            CHECK(v % pv.witness == 0);
        } else if (pv.witness_kind == WitnessKind::square_root) {
            CHECK(pv.witness * pv.witness == v);
        } else {
            CHECK(pv.witness_kind == WitnessKind::fermat_base);
        }
    }
    // square of a prime too large for the trial-division witness hunt
    auto sq = classify_prime(BigInt("1000003") * BigInt("1000003"));
    CHECK(sq.status == PrimeStatus::composite);
    CHECK(sq.witness_kind == WitnessKind::square_root);
    CHECK(sq.witness == 1000003);
}

TEST_CASE("deterministic verdicts") {
    BigInt big = pell(101);  // 39 digits, beyond the 64-bit deterministic range
    auto a = classify_prime(big);
    auto b = classify_prime(big);
    CHECK(a.status == PrimeStatus::probable_prime);
    CHECK(a.status == b.status);
    CHECK(a.rounds == b.rounds);
    CHECK(a.rounds >= 40);
    CHECK(a.witness == b.witness);
}

TEST_CASE("64-bit boundary") {
    // Mersenne prime 2^61 - 1 sits inside the deterministic-base range
    CHECK(classify_prime(BigInt("2305843009213693951")).status == PrimeStatus::prime);
    // 2^89 - 1 is prime but too wide: only a probabilistic verdict is claimed
    CHECK(classify_prime(BigInt("618970019642690137449562111")).status ==
          PrimeStatus::probable_prime);
}

TEST_CASE("pell prime scan") {
    auto hits = pell_prime_scan(60);
    CHECK(hits == std::vector<int>{2, 3, 5, 11, 13, 29, 41, 53, 59});
    for (int m : hits) CHECK(classify_prime(m).is_prime_ish());
    CHECK_THROWS_AS(pell_prime_scan(1), std::invalid_argument);
}
