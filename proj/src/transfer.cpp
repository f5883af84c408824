#include "thk/transfer.hpp"

#include <numeric>
#include <stdexcept>

#include "thk/braid.hpp"
#include "thk/coloring.hpp"
#include "thk/determinant.hpp"
#include "thk/modp.hpp"
#include "thk/numbertheory.hpp"

namespace thk {

IntMatrix build_Am(int m) {
    if (m < 2) throw std::invalid_argument("build_Am: need m >= 2");
    IntMatrix A(m, m);
    A.at(0, 0) = 2;
    A.at(0, 1) = -1;
    for (int i = 1; i < m - 1; ++i) {
        int r = i + 1;  // 1-based row
        if (r % 2 == 0) {
            A.at(i, r) = 1;  // shift row: single 1 at column r+1
        } else {
            int k = (r - 1) / 2;
            A.at(i, r) = -1;
            A.at(i, r - 1) = 4;
            int sign = -1;
            for (int j = k - 1; j >= 1; --j) {
                A.at(i, 2 * j) = 4 * sign;
                sign = -sign;
            }
            A.at(i, 0) = (k % 2 == 0) ? 2 : -2;
        }
    }
    int i = m - 1;
    if (m % 2 == 0) {
        int q = m / 2;
        int sign = 1;
        for (int j = q - 1; j >= 1; --j) {
            A.at(i, 2 * j) = 2 * sign;
            sign = -sign;
        }
        A.at(i, 0) = ((q - 1) % 2 == 0) ? 1 : -1;
    } else {
        int q = (m - 1) / 2;
        A.at(i, m - 1) = 2;
        int sign = -1;
        for (int j = q - 1; j >= 1; --j) {
            A.at(i, 2 * j) = 2 * sign;
            sign = -sign;
        }
        A.at(i, 0) = (q % 2 == 0) ? 1 : -1;
    }
    for (int r2 = 0; r2 < m; ++r2) {
        BigInt s = 0;
        for (int c = 0; c < m; ++c) s += A.at(r2, c);
        if (s != 1) throw std::logic_error("build_Am: row sum != 1");
    }
    return A;
}

namespace {

IntPolynomial normalize_lowest_positive(IntPolynomial p) {
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        return c < 0 ? -p : p;
    }
    return p;
}

}  // namespace

IntPolynomial charpoly(const IntMatrix& a) {
    return normalize_lowest_positive(charpoly_monic(a));
}

IntPolynomial g_recursive(int m) {
    if (m < 2) throw std::invalid_argument("g_recursive: need m >= 2");
    IntPolynomial g2({BigInt(1), BigInt(-2), BigInt(1)});
    IntPolynomial g3({BigInt(1), BigInt(-4), BigInt(4), BigInt(-1)});
    if (m == 2) return g2;
    if (m == 3) return g3;
    IntPolynomial one_minus_x({BigInt(1), BigInt(-1)});
    IntPolynomial x = IntPolynomial::x_power(1);
    IntPolynomial prev = g2, cur = g3;
    for (int k = 4; k <= m; ++k) {
        IntPolynomial next = one_minus_x * cur - x * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial dm(int m) {
    return g_recursive(m).divide_exact_one_minus_x();
}

IntPolynomial power_poly(const IntPolynomial& p, int n) {
    if (n < 1) throw std::invalid_argument("power_poly: need n >= 1");
    BigInt c0 = p.constant();
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("power_poly: constant term must be +-1");
    int D = p.degree();
    if (D < 1) return IntPolynomial({BigInt(1)});
    IntPolynomial qt = p.reversed();  // monic up to sign; roots are reciprocals
    if (qt.leading() < 0) qt = -qt;

    // elementary symmetric functions of qt's roots
    std::vector<BigInt> e(D + 1);
    for (int k = 0; k <= D; ++k) e[k] = (k % 2 ? -qt.coeff(D - k) : qt.coeff(D - k));

    // Newton: p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    long nd = (long)n * D;
    std::vector<BigInt> ps(nd + 1);
    for (long k = 1; k <= nd; ++k) {
        BigInt acc = 0;
        for (long i = 1; i < k && i <= D; ++i) {
            BigInt t = e[i] * ps[k - i];
            acc += (i % 2 ? t : -t);
        }
        if (k <= D) {
            BigInt t = BigInt(k) * e[k];
            acc += (k % 2 ? t : -t);
        }
        ps[k] = acc;
    }

    // inverse Newton on the n-step power sums: k E_k = sum (-1)^{i-1} E_{k-i} P_i
    std::vector<BigInt> E(D + 1);
    E[0] = 1;
    for (int k = 1; k <= D; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= k; ++i) {
            BigInt t = E[k - i] * ps[(long)n * i];
            acc += (i % 2 ? t : -t);
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), (unsigned long)k))
            throw std::runtime_error("power_poly: inexact Newton division (coefficient corruption)");
        BigInt kk((unsigned long)k);
        mpz_divexact(E[k].get_mpz_t(), acc.get_mpz_t(), kk.get_mpz_t());
    }

    // monic polynomial with roots (1/alpha)^n, then reverse back to alpha^n
    std::vector<BigInt> masc(D + 1);
    for (int k = 0; k <= D; ++k) masc[D - k] = (k % 2 ? -E[k] : E[k]);
    return normalize_lowest_positive(IntPolynomial(std::move(masc)).reversed());
}

GValue G(int m, int n) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("G: m must be odd, >= 3");
    if (n < 1) throw std::invalid_argument("G: need n >= 1");
    GValue g{m, n, 0, false, 0, 0};
    IntPolynomial d = dm(m);
    g.value = abs(power_poly(d, n)(BigInt(1)));
    if (n % 2 == 1) {
        g.cofactor = 1;
        if (auto r = perfect_square_root(g.value)) {
            g.square_root = *r;
            g.square_ok = true;
        }
    } else {
        g.cofactor = abs(power_poly(d, 2)(BigInt(1)));
        BigInt q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), g.value.get_mpz_t(), g.cofactor.get_mpz_t());
        if (rem == 0) {
            if (auto r = perfect_square_root(q)) {
                g.square_root = *r;
                g.square_ok = true;
            }
        }
    }
    return g;
}

SquareStructure square_structure(int m, int n) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("square_structure: m must be odd, >= 3");
    if (n < 3) throw std::invalid_argument("square_structure: need n >= 3");
    GValue g = G(m, n);
    SquareStructure s{m, n, g.value, g.square_root, g.cofactor, false, false};
    s.ok = g.square_ok && g.square_root > 1;
    s.composite_confirmed = !classify_prime(g.value).is_prime_ish() && g.value > 1;
    return s;
}

RootReport roots_analysis(int m, int prec_bits) {
    if (m < 3) throw std::invalid_argument("roots_analysis: need m >= 3");
    if (prec_bits < 8 || prec_bits > 4096)
        throw std::invalid_argument("roots_analysis: precision out of range [8, 4096]");
    IntPolynomial d = dm(m);
    RootReport r;
    r.m = m;
    r.degree = d.degree();
    r.squarefree = is_squarefree(d);
    r.all_real_positive = r.squarefree && count_real_roots_above(d, Rational(0)) == r.degree;
    if (!r.squarefree) return r;
    r.roots = isolate_positive_roots(d, prec_bits);
    if ((int)r.roots.size() != r.degree)
        throw std::runtime_error("roots_analysis: positive-root count disagrees with certificate");
    Rational defect = 0;
    for (size_t i = 0; i < r.roots.size(); ++i) {
        Rational prod = r.roots[i] * r.roots[r.roots.size() - 1 - i] - 1;
        if (abs(prod) > defect) defect = abs(prod);
        r.roots_double.push_back(mpq_get_d(r.roots[i].get_mpq_t()));
    }
    r.reciprocal_defect = mpq_get_d(defect.get_mpq_t());
    Rational smallest = r.roots.front() < 1 ? r.roots.front() : Rational(1);
    r.smallest_g_root = mpq_get_d(smallest.get_mpq_t());
    return r;
}

Agreement verify_G_equals_det(int m, int n) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("verify_G_equals_det: m must be odd, >= 3");
    if (n < 2) throw std::invalid_argument("verify_G_equals_det: need n >= 2");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("verify_G_equals_det: need gcd(m,n) = 1");
    Agreement a{m, n, 0, 0, false};
    a.g = G(m, n).value;
    a.det = knot_determinant(build_thk(m, n)).value;
    a.agree = (a.g == a.det);
    return a;
}

bool eigen_coloring_bridge(int m, int n, std::uint64_t p) {
    if (m < 2 || n < 2) throw std::invalid_argument("eigen_coloring_bridge: need m, n >= 2");
    ModMatrix An = ModMatrix::reduce(build_Am(m), p).pow((unsigned long)n);
    return kernel_basis(An.minus_identity()).size() > 1;
}

}  // namespace thk
