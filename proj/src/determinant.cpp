#include "thk/determinant.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "thk/intmatrix.hpp"
#include "thk/numbertheory.hpp"
#include "thk/sequences.hpp"

namespace thk {

const char* det_method_name(DetMethod m) {
    switch (m) {
        case DetMethod::coloring_minor: return "coloring-minor";
        case DetMethod::matrix_tree: return "matrix-tree";
        case DetMethod::closed_form: return "closed-form";
        default: return "trig-product";
    }
}

DeterminantResult knot_determinant(const Diagram& d) {
    IntMatrix M = coloring_matrix(d);
    BigInt det = det_bareiss(M.minor_without(M.rows() - 1, M.cols() - 1));
    return {abs(det), DetMethod::coloring_minor};
}

BigInt det_closed_form_m3(int n) {
    if (n < 2) throw std::invalid_argument("det_closed_form_m3: need n >= 2");
    BigInt v = lucas(2 * (unsigned)n) - 2;
    // parity factorization: L_n^2 (odd n) / 5 F_n^2 (even n)
    BigInt check = n % 2 ? BigInt(lucas(n) * lucas(n)) : BigInt(5 * fibonacci(n) * fibonacci(n));
    if (check != v) throw std::logic_error("det_closed_form_m3: factorization identity failed");
    return v;
}

BigInt trig_count(int m, int n) {
    if (m % 2 != 0 || m < 4) throw std::invalid_argument("trig_count: m must be even, >= 4");
    if (n < 3) throw std::invalid_argument("trig_count: need n >= 3");
    mpfr_prec_t prec = std::max(128, 8 * m * n);
    mpfr_t pi, s1, s2, term, prod, rounded;
    mpfr_inits2(prec, pi, s1, s2, term, prod, rounded, (mpfr_ptr)nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(prod, 1, MPFR_RNDN);
    for (int h = 1; h < n; ++h)
        for (int k = 1; k < m / 2; ++k) {
            // 4 sin^2(h pi / n) + 4 sin^2(k pi / m)
            mpfr_mul_ui(s1, pi, h, MPFR_RNDN);
            mpfr_div_ui(s1, s1, n, MPFR_RNDN);
            mpfr_sin(s1, s1, MPFR_RNDN);
            mpfr_sqr(s1, s1, MPFR_RNDN);
            mpfr_mul_ui(s2, pi, k, MPFR_RNDN);
            mpfr_div_ui(s2, s2, m, MPFR_RNDN);
            mpfr_sin(s2, s2, MPFR_RNDN);
            mpfr_sqr(s2, s2, MPFR_RNDN);
            mpfr_add(term, s1, s2, MPFR_RNDN);
            mpfr_mul_ui(term, term, 4, MPFR_RNDN);
            mpfr_mul(prod, prod, term, MPFR_RNDN);
        }
    // the conjugate-root product is an integer; demand residue < 2^-32
    mpfr_round(rounded, prod);
    mpfr_sub(prod, prod, rounded, MPFR_RNDN);
    mpfr_abs(prod, prod, MPFR_RNDN);
    bool ok = mpfr_cmp_d(prod, 1.0 / 4294967296.0) < 0;
    BigInt inner;
    mpfr_get_z(inner.get_mpz_t(), rounded, MPFR_RNDN);
    mpfr_clears(pi, s1, s2, term, prod, rounded, (mpfr_ptr)nullptr);
    if (!ok) throw std::runtime_error("trig_count: rounding residue above 2^-32, precision insufficient");
    if (inner <= 1) throw std::logic_error("trig_count: inner product not > 1");
    return n * inner;
}

CompositeWitness composite_determinant_check(int m, int n) {
    if (std::gcd(m, n) != 1 || n < 3 || (m != 3 && m % 2 != 0))
        throw std::invalid_argument("composite_determinant_check: need gcd(m,n)=1, n >= 3, m = 3 or m even");
    CompositeWitness w;
    w.m = m;
    w.n = n;
    if (m == 3) {
        w.det = det_closed_form_m3(n);
        if (n % 2) {
            BigInt l = lucas(n);
            w.factors = {l, l};
            w.description = l.get_str() + "^2";
        } else {
            BigInt f = fibonacci(n);
            w.factors = {BigInt(5), f, f};
            w.description = "5*" + f.get_str() + "^2";
        }
    } else {
        w.det = knot_determinant(build_thk(m, n)).value;
        BigInt q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), w.det.get_mpz_t(), (unsigned long)n);
        if (r != 0 || q <= 1)
            throw std::logic_error("composite_determinant_check: determinant not n times an integer > 1");
        w.factors = {BigInt(n), q};
        w.description = std::to_string(n) + "*" + q.get_str();
    }
    BigInt prod = 1;
    for (const auto& f : w.factors) prod *= f;
    if (prod != w.det) throw std::logic_error("composite_determinant_check: witness product mismatch");
    w.composite = !classify_prime(w.det).is_prime_ish();
    if (!w.composite) throw std::logic_error("composite_determinant_check: value tested prime");
    return w;
}

}  // namespace thk
