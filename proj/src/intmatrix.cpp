#include "thk/intmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace thk {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.c_; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::minor_without(size_t row, size_t col) const {
    IntMatrix out(r_ - 1, c_ - 1);
    for (size_t i = 0, oi = 0; i < r_; ++i) {
        if (i == row) continue;
        for (size_t j = 0, oj = 0; j < c_; ++j) {
            if (j == col) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (size_t i = 0; i < r_ && i < c_; ++i) t += at(i, i);
    return t;
}

BigInt det_bareiss(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
    size_t n = m.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntPolynomial charpoly_monic(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly_monic: matrix not square");
    size_t n = a.rows();
    // Faddeev-LeVerrier: M_1 = I, c_1 = -tr(A);
    // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k  (division exact)
    std::vector<BigInt> c(n + 1, 0);
    c[0] = 1;  // coefficient of x^n
    IntMatrix M = IntMatrix::identity(n);
    IntMatrix AM = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (size_t i = 0; i < n; ++i) M.at(i, i) = AM.at(i, i) + c[k - 1];
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (i != j) M.at(i, j) = AM.at(i, j);
            AM = a * M;
        }
        BigInt t = AM.trace(), kk((unsigned long)k), ck;
        mpz_divexact(ck.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
        c[k] = -ck;
    }
    // assemble ascending: coefficient of x^{n-k} is c[k]
    std::vector<BigInt> asc(n + 1);
    for (size_t k = 0; k <= n; ++k) asc[n - k] = c[k];
    return IntPolynomial(std::move(asc));
}

}  // namespace thk
