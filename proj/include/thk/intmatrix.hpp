#pragma once
#include <vector>

#include "thk/bigint.hpp"
#include "thk/polynomial.hpp"

namespace thk {

// Dense square/rectangular integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    BigInt& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const BigInt& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix minor_without(size_t row, size_t col) const;
    BigInt trace() const;

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt det_bareiss(IntMatrix m);

// Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier; all interior
// divisions are exact over the integers.  Returned ascending; monic.
IntPolynomial charpoly_monic(const IntMatrix& a);

}  // namespace thk
