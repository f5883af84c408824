#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>

namespace thk {

using BigInt = mpz_class;
using Rational = mpq_class;

// floor(sqrt(v)), v >= 0
inline BigInt isqrt(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// exact square root if v is a perfect square
inline std::optional<BigInt> perfect_square_root(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = isqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace thk
