#include "thk/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace thk {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::x_power(size_t k) {
    std::vector<BigInt> c(k + 1, 0);
    c[k] = 1;
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r = c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = BigInt((long)i) * c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

bool IntPolynomial::palindromic_up_to_sign() const {
    if (c_.empty()) return true;
    int sgn = 0;  // +1 palindromic, -1 anti
    for (size_t i = 0, j = c_.size() - 1; i <= j; ++i, --j) {
        if (c_[i] == c_[j]) {
            if (sgn == -1 && c_[i] != 0) return false;
            if (c_[i] != 0) sgn = 1;
        } else if (c_[i] == -c_[j]) {
            if (sgn == 1) return false;
            sgn = -1;
        } else {
            return false;
        }
    }
    return true;
}

IntPolynomial IntPolynomial::divide_exact_one_minus_x() const {
    // p = (1 - x) q  =>  q_0 = p_0, q_k = p_k + q_{k-1}; remainder must vanish
    if (is_zero()) return {};
    std::vector<BigInt> q(c_.size() - 1);
    BigInt carry = 0;
    for (size_t k = 0; k + 1 < c_.size(); ++k) {
        carry = c_[k] + carry;
        q[k] = carry;
    }
    if (carry != -c_.back())
        throw std::domain_error("divide_exact_one_minus_x: 1 is not a root");
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& a = c_[k];
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// ----- Sturm chains over rationals -----

namespace {

using QPoly = std::vector<Rational>;  // ascending, trimmed

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPolynomial& p) {
    QPoly q(p.coeffs().size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = Rational(p.coeffs()[i]);
    return q;
}

// remainder of a by b (b nonzero)
QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

int qsign(const Rational& v) { return sgn(v); }

Rational qeval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

struct SturmChain {
    std::vector<QPoly> seq;

    explicit SturmChain(const IntPolynomial& p) {
        QPoly a = to_qpoly(p);
        QPoly b = to_qpoly(p.derivative());
        seq.push_back(a);
        while (!b.empty()) {
            seq.push_back(b);
            QPoly r = qrem(a, b);
            for (auto& v : r) v = -v;
            a = std::move(b);
            b = std::move(r);
        }
    }

    // sign variations at finite x
    int variations_at(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int s = qsign(qeval(p, x));
            if (s != 0 && prev != 0 && s != prev) ++var;
            if (s != 0) prev = s;
        }
        return var;
    }

    int variations_at_pos_inf() const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = qsign(p.back());
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // last nonzero element of the chain is a constant iff squarefree
    bool squarefree() const { return !seq.empty() && seq.back().size() == 1; }
};

}  // namespace

int count_real_roots_above(const IntPolynomial& p, const Rational& a) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots_above: zero polynomial");
    SturmChain ch(p);
    if (qsign(qeval(ch.seq.front(), a)) == 0)
        throw std::invalid_argument("count_real_roots_above: a is a root");
    return ch.variations_at(a) - ch.variations_at_pos_inf();
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() <= 1) return true;
    return SturmChain(p).squarefree();
}

std::vector<Rational> isolate_positive_roots(const IntPolynomial& p, int prec_bits) {
    if (p.is_zero() || p.constant() == 0)
        throw std::invalid_argument("isolate_positive_roots: need p(0) != 0");
    SturmChain ch(p);
    if (!ch.squarefree()) throw std::invalid_argument("isolate_positive_roots: not squarefree");

    // Cauchy bound: all roots inside |x| <= 1 + max|c_i|/|lead|
    BigInt maxc = 0;
    for (const auto& c : p.coeffs()) if (abs(c) > maxc) maxc = abs(c);
    BigInt lead = abs(p.leading());
    Rational bound = Rational(maxc) / Rational(lead) + 2;

    Rational eps(1);
    eps /= (BigInt(1) << prec_bits);

    std::vector<Rational> roots;
    // (lo, hi] with the number of roots it contains; exact-root hits emitted directly
    struct Seg { Rational lo, hi; int cnt; };
    std::vector<Seg> stack;
    auto count_in = [&](const Rational& lo, const Rational& hi) {
        return ch.variations_at(lo) - ch.variations_at(hi);
    };
    stack.push_back({Rational(0), bound, count_in(Rational(0), bound)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.cnt == 0) continue;
        Rational width = s.hi - s.lo;
        if (s.cnt == 1 && width <= eps) {
            roots.push_back((s.lo + s.hi) / 2);
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (qsign(qeval(ch.seq.front(), mid)) == 0) {
            roots.push_back(mid);  // exact rational root
            // nudge around it so sub-intervals have nonzero endpoints
            Rational d = width / 4;
            while (qsign(qeval(ch.seq.front(), mid - d)) == 0 ||
                   qsign(qeval(ch.seq.front(), mid + d)) == 0)
                d /= 2;
            int left = count_in(s.lo, mid - d);
            int right = count_in(mid + d, s.hi);
            if (left > 0) stack.push_back({s.lo, mid - d, left});
            if (right > 0) stack.push_back({mid + d, s.hi, right});
            continue;
        }
        int left = count_in(s.lo, mid);
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (s.cnt - left > 0) stack.push_back({mid, s.hi, s.cnt - left});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string rational_decimal(const Rational& q, int digits) {
    mpf_class f(q, (digits + 8) * 4);
    mp_exp_t exp;
    std::string mant = f.get_str(exp, 10, digits);
    // reassemble as plain decimal
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    std::string out = neg ? "-" : "";
    if (mant.empty()) return "0";
    if (exp <= 0) {
        out += "0." + std::string(-exp, '0') + mant;
    } else if ((size_t)exp >= mant.size()) {
        out += mant + std::string(exp - mant.size(), '0');
    } else {
        out += mant.substr(0, exp) + "." + mant.substr(exp);
    }
    return out;
}

}  // namespace thk
