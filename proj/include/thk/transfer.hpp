#pragma once
#include <cstdint>
#include <vector>

#include "thk/bigint.hpp"
#include "thk/intmatrix.hpp"
#include "thk/polynomial.hpp"

namespace thk {

// Color-propagation transfer matrix across one braid column; every row sums
// to 1 (constant vectors are fixed).  Matches the displayed A_2..A_5 forms.
IntMatrix build_Am(int m);

// characteristic polynomial with the lowest nonzero coefficient normalized
// positive — for the transfer matrices this pins the constant term to +1
IntPolynomial charpoly(const IntMatrix& a);

// g_{m+1} = (1-x) g_m - x g_{m-1}, seeded with g_2, g_3
IntPolynomial g_recursive(int m);

// d_m = g_m / (1-x); coefficients are the signed centered-Delannoy row m-1
IntPolynomial dm(int m);

// Polynomial with the n-th powers of p's roots, exact over the integers via
// Newton power sums on the reversed (monic) polynomial; requires constant
// term +-1.  Constant term of the result normalized to +1.
IntPolynomial power_poly(const IntPolynomial& p, int n);

struct GValue {
    int m, n;
    BigInt value;        // |d_m^(n)(1)|
    bool square_ok;      // factorization fields extracted successfully
    BigInt square_root;  // G' with value = cofactor * G'^2
    BigInt cofactor;     // 1 for odd n, G_{m,2} for even n
};

GValue G(int m, int n);

struct SquareStructure {
    int m, n;
    BigInt value, root, cofactor;
    bool ok;                   // square extracted and root > 1
    bool composite_confirmed;  // numbertheory verdict on the value
};

// Theorem 1.5 shape: n odd => perfect square; n even => G(m,2) times a square
SquareStructure square_structure(int m, int n);

struct RootReport {
    int m;
    int degree;              // deg d_m
    bool squarefree;
    bool all_real_positive;  // exact: sign-variation count on (0,inf) == degree
    std::vector<Rational> roots;  // ascending, within 2^-prec of the true roots
    std::vector<double> roots_double;
    double reciprocal_defect;  // max |r_i * r_{D+1-i} - 1| over pairs
    double smallest_g_root;    // min(1, smallest root) since g_m = (1-x) d_m
};

RootReport roots_analysis(int m, int prec_bits = 96);

struct Agreement {
    int m, n;
    BigInt g, det;
    bool agree;
};

// G(m,n) vs the diagram determinant, computed independently
Agreement verify_G_equals_det(int m, int n);

// kernel of (A_m^n - I) mod p has dimension > 1 exactly when THK(m,n) is
// p-colorable by the diagram route
bool eigen_coloring_bridge(int m, int n, std::uint64_t p);

}  // namespace thk
