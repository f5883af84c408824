#pragma once
#include <cstdint>
#include <vector>

#include "thk/bigint.hpp"
#include "thk/intmatrix.hpp"

namespace thk {

// Arithmetic in F_p, p an odd prime < 2^62.
struct Fp {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return (std::uint64_t)((unsigned __int128)a * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a % p, p - 2); }
};

class ModMatrix {
  public:
    ModMatrix(size_t rows, size_t cols, std::uint64_t p)
        : r_(rows), c_(cols), fp_{p}, a_(rows * cols, 0) {}
    static ModMatrix reduce(const IntMatrix& m, std::uint64_t p);
    static ModMatrix identity(size_t n, std::uint64_t p);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    std::uint64_t modulus() const { return fp_.p; }
    std::uint64_t& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    std::uint64_t at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    ModMatrix operator*(const ModMatrix& o) const;
    ModMatrix pow(unsigned long e) const;
    ModMatrix minus_identity() const;

  private:
    size_t r_, c_;
    Fp fp_;
    std::vector<std::uint64_t> a_;
};

// Basis of { v : M v = 0 } over F_p, via row reduction; deterministic
// (free columns in ascending order, pivot entries normalized to 1).
std::vector<std::vector<std::uint64_t>> kernel_basis(ModMatrix m);

size_t rank_mod_p(ModMatrix m);

// nonzero rows of the reduced row echelon form: canonical row-space basis
std::vector<std::vector<std::uint64_t>> row_space_basis(ModMatrix m);

}  // namespace thk
