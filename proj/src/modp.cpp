#include "thk/modp.hpp"

#include <stdexcept>
#include <utility>

namespace thk {

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ModMatrix ModMatrix::reduce(const IntMatrix& m, std::uint64_t p) {
    ModMatrix out(m.rows(), m.cols(), p);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
    return out;
}

ModMatrix ModMatrix::identity(size_t n, std::uint64_t p) {
    ModMatrix m(n, n, p);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
    if (c_ != o.r_ || fp_.p != o.fp_.p) throw std::invalid_argument("ModMatrix: mismatch");
    ModMatrix out(r_, o.c_, fp_.p);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            std::uint64_t v = at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < o.c_; ++j)
                out.at(i, j) = fp_.add(out.at(i, j), fp_.mul(v, o.at(k, j)));
        }
    return out;
}

ModMatrix ModMatrix::pow(unsigned long e) const {
    if (r_ != c_) throw std::invalid_argument("ModMatrix::pow: not square");
    ModMatrix base = *this, acc = identity(r_, fp_.p);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ModMatrix ModMatrix::minus_identity() const {
    ModMatrix out = *this;
    for (size_t i = 0; i < r_ && i < c_; ++i) out.at(i, i) = fp_.sub(out.at(i, i), 1 % fp_.p);
    return out;
}

namespace {

// row-reduce in place; returns pivot column of each pivot row
std::vector<size_t> rref(ModMatrix& m) {
    Fp fp{m.modulus()};
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        std::uint64_t iv = fp.inv(m.at(row, col));
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = fp.mul(m.at(row, j), iv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            std::uint64_t f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = fp.sub(m.at(i, j), fp.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> kernel_basis(ModMatrix m) {
    Fp fp{m.modulus()};
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(m.cols(), 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = fp.sub(0, m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank_mod_p(ModMatrix m) { return rref(m).size(); }

std::vector<std::vector<std::uint64_t>> row_space_basis(ModMatrix m) {
    size_t r = rref(m).size();
    std::vector<std::vector<std::uint64_t>> rows(r, std::vector<std::uint64_t>(m.cols()));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace thk
