#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "thk/bigint.hpp"
#include "thk/braid.hpp"
#include "thk/modp.hpp"

namespace thk {

struct Nullspace {
    std::uint64_t p;
    int dimension;
    std::vector<std::vector<std::uint64_t>> basis;
};

// kernel of the coloring matrix over F_p; dimension >= 1 (constant vector)
Nullspace nullspace_mod_p(const IntMatrix& coloring, std::uint64_t p);

struct HKOptions {
    int threads = 0;         // 0 = runtime default; 1 = serial reference path
    std::uint64_t cap = 0;   // 0 = enumerate everything
};

struct HKWitness {
    int arc_a, arc_b;          // distinct arcs sharing a color
    std::uint64_t color;
    std::uint64_t class_index;  // 1-based index of the translation class
};

struct HKVerdict {
    std::uint64_t p;
    int nullspace_dimension;
    BigInt colorings_checked;
    bool complete;       // false when a cap cut enumeration short
    bool heterogeneous;  // no checked non-trivial coloring repeats a color
    std::optional<HKWitness> witness;
};

// Enumerates non-trivial colorings up to additive translation (p^(dim-1) - 1
// representatives; p - 1 when dim = 2) and checks that each assigns pairwise
// distinct colors.  Throws if p does not divide the determinant (dim < 2).
// First collision in class order wins as witness regardless of thread count.
HKVerdict hk_verify(const Diagram& d, std::uint64_t p, const HKOptions& opt = {});

// Integer propagation of the symbolic coloring (0, a) through THK(m,2):
// arc coefficients c with color(arc) = c*a.  Exposed for the S-sequence ops.
std::vector<BigInt> thk_m2_propagation(int m);

// Positive coefficients of the propagation, ascending: S_1..S_{m-2}.
// Asserts pair structure (s paired with -(s+1)) and the recursion
// S_k = 2 S_{k-1} + S_{k-2} + 1.
std::vector<BigInt> thk_m2_coefficients(int m);

// max positive coefficient S_{m-2} < pell(m)/2 - 1, checked in exact integers
bool bound_check(int m);

// a * (base coloring) is a valid coloring and is heterogeneous iff the base is
bool scaling_heterogeneity(const Diagram& d, std::uint64_t p, std::uint64_t a);

}  // namespace thk
