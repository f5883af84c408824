#pragma once
#include <string>
#include <vector>

#include "thk/bigint.hpp"
#include "thk/braid.hpp"

namespace thk {

enum class DetMethod { coloring_minor, matrix_tree, closed_form, trig_product };

const char* det_method_name(DetMethod m);

struct DeterminantResult {
    BigInt value;
    DetMethod method;
};

// |first minor| of the coloring matrix (last row/column deleted)
DeterminantResult knot_determinant(const Diagram& d);

// L_{2n} - 2; asserts the parity factorization (L_n^2 for odd n, 5 F_n^2 even)
BigInt det_closed_form_m3(int n);

// n * prod_{h<n,k<m/2} (4 sin^2(h pi/n) + 4 sin^2(k pi/m)), evaluated at
// max(128, 8mn) bits; the inner product must land within 2^-32 of an integer.
BigInt trig_count(int m, int n);

struct CompositeWitness {
    int m, n;
    BigInt det;
    bool composite = false;
    std::vector<BigInt> factors;  // multiply to det
    std::string description;
};

// Theorem 1.4 instances: m = 3 (Lucas/Fibonacci witness) or m even (factor n)
CompositeWitness composite_determinant_check(int m, int n);

}  // namespace thk
