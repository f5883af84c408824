#pragma once
#include <string>
#include <vector>

#include "thk/bigint.hpp"

namespace thk {

enum class PrimeStatus { prime, probable_prime, composite };

enum class WitnessKind { none, unit, factor, square_root, fermat_base };

struct PrimalityVerdict {
    BigInt value;
    PrimeStatus status = PrimeStatus::composite;
    int rounds = 0;              // Miller-Rabin rounds performed
    WitnessKind witness_kind = WitnessKind::none;
    BigInt witness = 0;          // factor, square root, or MR witness base
    bool is_prime_ish() const {
        return status == PrimeStatus::prime || status == PrimeStatus::probable_prime;
    }
    std::string status_str() const;
};

// Deterministic Miller-Rabin below 2^64 (12 fixed bases); >= 40 pseudorandom
// rounds above, seeded from the value itself so verdicts are reproducible.
// For composites, tries to attach a cheap witness: a small factor, an exact
// square root, or the failing base.  1 is reported composite (unit witness).
PrimalityVerdict classify_prime(const BigInt& v);

// m in [2, max_m] with Pell number P_m (probable-)prime.  Every returned
// index is itself prime (checked; a composite index with prime P_m would be
// a contradiction of the index-divisibility property and throws).
std::vector<int> pell_prime_scan(int max_m);

}  // namespace thk
