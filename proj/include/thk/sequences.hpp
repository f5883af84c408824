#pragma once
#include <vector>

#include "thk/bigint.hpp"

namespace thk {

// Pell numbers, 1-indexed: P_1 = 1, P_2 = 2, P_k = 2 P_{k-1} + P_{k-2}.
BigInt pell(unsigned k);

// Lucas numbers: L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
BigInt lucas(unsigned k);

// Fibonacci numbers, 1-indexed: F_1 = F_2 = 1.
BigInt fibonacci(unsigned k);

// Centered-Delannoy triangle entry, row i >= 0, 0 <= k <= i.
// Row 0 = [1], row 1 = [1,1]; interior entries obey
//   T(i,k) = T(i-1,k-1) + T(i-1,k) + T(i-2,k-1)
// (left parent + right parent + grandparent).  Out-of-range k gives 0.
BigInt delannoy(unsigned row, unsigned col);

std::vector<BigInt> delannoy_row(unsigned row);

// Offset sequence driving the weaving-diagram arc coefficients:
// S_1 = 1, S_2 = 3, S_k = 2 S_{k-1} + S_{k-2} + 1.  1-indexed.
BigInt offset_s(unsigned k);

}  // namespace thk
