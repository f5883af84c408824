#include "thk/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace thk {
namespace {

// Linear-recurrence memo, safe for concurrent callers.  Values are tiny
// relative to everything else here, so a single lock is fine.
class RecMemo {
  public:
    RecMemo(BigInt a0, BigInt a1, int c1, int c0, int add)
        : vals_{std::move(a0), std::move(a1)}, c1_(c1), c0_(c0), add_(add) {}

    BigInt at(size_t i) {
        std::lock_guard<std::mutex> lk(mu_);
        while (vals_.size() <= i) {
            size_t n = vals_.size();
            vals_.push_back(c1_ * vals_[n - 1] + c0_ * vals_[n - 2] + add_);
        }
        return vals_[i];
    }

  private:
    std::mutex mu_;
    std::vector<BigInt> vals_;
    int c1_, c0_, add_;
};

RecMemo pell_memo(1, 2, 2, 1, 0);      // P_1, P_2
RecMemo lucas_memo(2, 1, 1, 1, 0);     // L_0, L_1
RecMemo fib_memo(1, 1, 1, 1, 0);       // F_1, F_2
RecMemo offset_memo(1, 3, 2, 1, 1);    // S_1, S_2

std::mutex delannoy_mu;
std::vector<std::vector<BigInt>> delannoy_rows;  // guarded by delannoy_mu

void delannoy_extend(unsigned row) {
    if (delannoy_rows.empty()) {
        delannoy_rows.push_back({BigInt(1)});
        delannoy_rows.push_back({BigInt(1), BigInt(1)});
    }
    auto at = [](unsigned i, long k) -> BigInt {
        if (k < 0 || k >= (long)delannoy_rows[i].size()) return 0;
        return delannoy_rows[i][k];
    };
    while (delannoy_rows.size() <= row) {
        unsigned i = delannoy_rows.size();
        std::vector<BigInt> r(i + 1);
        for (unsigned k = 0; k <= i; ++k)
            r[k] = at(i - 1, (long)k - 1) + at(i - 1, k) + at(i - 2, (long)k - 1);
        delannoy_rows.push_back(std::move(r));
    }
}

}  // namespace

BigInt pell(unsigned k) {
    if (k == 0) throw std::invalid_argument("pell: index must be >= 1");
    return pell_memo.at(k - 1);
}

BigInt lucas(unsigned k) { return lucas_memo.at(k); }

BigInt fibonacci(unsigned k) {
    if (k == 0) throw std::invalid_argument("fibonacci: index must be >= 1");
    return fib_memo.at(k - 1);
}

BigInt offset_s(unsigned k) {
    if (k == 0) throw std::invalid_argument("offset_s: index must be >= 1");
    return offset_memo.at(k - 1);
}

BigInt delannoy(unsigned row, unsigned col) {
    if (col > row) return 0;
    std::lock_guard<std::mutex> lk(delannoy_mu);
    delannoy_extend(row);
    return delannoy_rows[row][col];
}

std::vector<BigInt> delannoy_row(unsigned row) {
    std::lock_guard<std::mutex> lk(delannoy_mu);
    delannoy_extend(row);
    return delannoy_rows[row];
}

}  // namespace thk
