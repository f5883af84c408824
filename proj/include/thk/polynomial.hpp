#pragma once
#include <string>
#include <vector>

#include "thk/bigint.hpp"

namespace thk {

// Dense integer polynomial, coefficients ascending by degree.
// Zero polynomial has empty coefficient vector and degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial x_power(size_t k);

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
    BigInt constant() const { return coeff(0); }

    BigInt operator()(const BigInt& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    IntPolynomial derivative() const;
    IntPolynomial reversed() const;  // x^deg * p(1/x)

    // coefficients read the same front-to-back up to a global sign flip
    bool palindromic_up_to_sign() const;

    // exact quotient by (1 - x); throws std::domain_error if 1 is not a root
    IntPolynomial divide_exact_one_minus_x() const;

    std::string str() const;  // descending powers, e.g. "x^2 - 2x + 1"

  private:
    std::vector<BigInt> c_;
    void trim();
};

// --- exact real-root machinery (Sturm chains over rationals) ---

// distinct real roots strictly above `a`; requires p(a) != 0 and p nonzero
int count_real_roots_above(const IntPolynomial& p, const Rational& a);

// gcd(p, p') is constant
bool is_squarefree(const IntPolynomial& p);

// Midpoints of isolating intervals for all roots in (0, inf), ascending,
// each within 2^-prec_bits of the true root.
// Requires p squarefree with p(0) != 0.
std::vector<Rational> isolate_positive_roots(const IntPolynomial& p, int prec_bits);

std::string rational_decimal(const Rational& q, int digits);

}  // namespace thk
