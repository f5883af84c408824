#include "thk/coloring.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "thk/numbertheory.hpp"
#include "thk/sequences.hpp"

namespace thk {

namespace {

bool valid_coloring(const Diagram& d, const std::vector<std::uint64_t>& colors, std::uint64_t p) {
    Fp fp{p};
    for (const Crossing& c : d.crossings()) {
        std::uint64_t lhs = fp.mul(2 % p, colors[c.over]);
        if (lhs != fp.add(colors[c.under_in], colors[c.under_out])) return false;
    }
    return true;
}

bool heterogeneous_colors(std::vector<std::uint64_t> colors) {
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

// deterministic basis of the kernel subspace { v : v[0] = 0 }: the
// translation-class representatives are its nonzero combinations
std::vector<std::vector<std::uint64_t>> translation_reduced(const Nullspace& ns, size_t narcs) {
    Fp fp{ns.p};
    ModMatrix c((size_t)ns.dimension, narcs, ns.p);
    for (size_t i = 0; i < (size_t)ns.dimension; ++i)
        for (size_t j = 0; j < narcs; ++j)
            c.at(i, j) = fp.sub(ns.basis[i][j], ns.basis[i][0]);  // subtract v[0]*(all-ones)
    auto rows = row_space_basis(std::move(c));
    if (rows.size() + 1 != (size_t)ns.dimension)
        throw std::logic_error("translation_reduced: unexpected quotient dimension");
    return rows;
}

}  // namespace

Nullspace nullspace_mod_p(const IntMatrix& coloring, std::uint64_t p) {
    if (!classify_prime(BigInt(p)).is_prime_ish())
        throw std::invalid_argument("nullspace_mod_p: p must be prime");
    Nullspace ns;
    ns.p = p;
    ns.basis = kernel_basis(ModMatrix::reduce(coloring, p));
    ns.dimension = (int)ns.basis.size();
    if (ns.dimension < 1) throw std::logic_error("nullspace_mod_p: lost the constant vector");
    return ns;
}

HKVerdict hk_verify(const Diagram& d, std::uint64_t p, const HKOptions& opt) {
    IntMatrix M = coloring_matrix(d);
    Nullspace ns = nullspace_mod_p(M, p);
    HKVerdict v;
    v.p = p;
    v.nullspace_dimension = ns.dimension;
    if (ns.dimension < 2)
        throw std::invalid_argument("hk_verify: not p-colorable (p does not divide the determinant)");

    size_t narcs = (size_t)d.arc_count();
    auto gens = translation_reduced(ns, narcs);
    for (const auto& g : gens)
        if (!valid_coloring(d, g, p))
            throw std::logic_error("hk_verify: kernel vector fails a crossing relation");

    int dfree = ns.dimension - 1;
    BigInt total = 1;
    for (int i = 0; i < dfree; ++i) total *= BigInt(p);
    total -= 1;
    BigInt limit_big = (opt.cap > 0 && BigInt(opt.cap) < total) ? BigInt(opt.cap) : total;
    if (limit_big > BigInt("1000000000000"))
        throw std::runtime_error("hk_verify: enumeration too large; pass a cap");
    std::uint64_t limit = mpz_get_ui(limit_big.get_mpz_t());
    v.colorings_checked = limit_big;
    v.complete = (limit_big == total);

    int nthreads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    bool hetero = true;
    std::uint64_t best_t = 0;
    HKWitness best_w{};

#pragma omp parallel num_threads(nthreads)
    {
        std::vector<std::uint64_t> colors(narcs);
        std::vector<std::pair<std::uint64_t, int>> order(narcs);  // (color, arc)
        bool my_hetero = true;
        std::uint64_t my_t = 0;
        HKWitness my_w{};
#pragma omp for schedule(static)
        for (long long tt = 1; tt <= (long long)limit; ++tt) {
            // digits of tt in base p pick the combination of generators
            std::uint64_t rem = (std::uint64_t)tt;
            std::fill(colors.begin(), colors.end(), 0);
            Fp fp{p};
            for (int i = 0; i < dfree && rem; ++i) {
                std::uint64_t lam = rem % p;
                rem /= p;
                if (!lam) continue;
                for (size_t j = 0; j < narcs; ++j)
                    colors[j] = fp.add(colors[j], fp.mul(lam, gens[i][j]));
            }
            for (size_t j = 0; j < narcs; ++j) order[j] = {colors[j], (int)j};
            std::sort(order.begin(), order.end());
            for (size_t j = 0; j + 1 < narcs; ++j) {
                if (order[j].first != order[j + 1].first) continue;
                if (my_hetero || (std::uint64_t)tt < my_t) {
                    my_hetero = false;
                    my_t = (std::uint64_t)tt;
                    my_w = {order[j].second, order[j + 1].second, order[j].first, (std::uint64_t)tt};
                }
                break;
            }
        }
#pragma omp critical
        {
            if (!my_hetero && (hetero || my_t < best_t)) {
                hetero = false;
                best_t = my_t;
                best_w = my_w;
            }
        }
    }
    v.heterogeneous = hetero;
    if (!hetero) v.witness = best_w;
    return v;
}

std::vector<BigInt> thk_m2_propagation(int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("thk_m2_propagation: m must be odd, >= 3");
    Diagram d = build_thk(m, 2);
    int N = d.arc_count();
    std::vector<BigInt> c(N, 0);
    std::vector<char> known(N, 0);
    c[d.entry_arc(0)] = 0;
    known[d.entry_arc(0)] = 1;
    c[d.entry_arc(1)] = 1;
    known[d.entry_arc(1)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Crossing& cr : d.crossings()) {
            int kn = known[cr.over] + known[cr.under_in] + known[cr.under_out];
            if (kn != 2) continue;
            if (!known[cr.under_out]) {
                c[cr.under_out] = 2 * c[cr.over] - c[cr.under_in];
                known[cr.under_out] = 1;
            } else if (!known[cr.under_in]) {
                c[cr.under_in] = 2 * c[cr.over] - c[cr.under_out];
                known[cr.under_in] = 1;
            } else {
                BigInt s = c[cr.under_in] + c[cr.under_out];
                if (mpz_odd_p(s.get_mpz_t())) continue;  // cannot infer over-arc yet
                c[cr.over] = s / 2;
                known[cr.over] = 1;
            }
            changed = true;
        }
    }
    for (int i = 0; i < N; ++i)
        if (!known[i]) throw std::logic_error("thk_m2_propagation: propagation did not close");
    // wrap relations miss by exactly the determinant: residual 0 or +-P_m
    BigInt pm = pell((unsigned)m);
    for (const Crossing& cr : d.crossings()) {
        BigInt r = 2 * c[cr.over] - c[cr.under_in] - c[cr.under_out];
        if (r != 0 && abs(r) != pm)
            throw std::logic_error("thk_m2_propagation: residual is not 0 or +-pell(m)");
    }
    return c;
}

std::vector<BigInt> thk_m2_coefficients(int m) {
    std::vector<BigInt> c = thk_m2_propagation(m);
    std::vector<BigInt> pos, all = c;
    for (const auto& v : c)
        if (v > 0) pos.push_back(v);  // S_1 = 1 is the propagation seed itself
    std::sort(pos.begin(), pos.end());
    if ((int)pos.size() != m - 2)
        throw std::logic_error("thk_m2_coefficients: expected m-2 positive coefficients");
    // pair structure: every s in {0} union S appears alongside -(s+1)
    std::sort(all.begin(), all.end());
    auto present = [&](const BigInt& v) {
        return std::binary_search(all.begin(), all.end(), v);
    };
    if (!present(0) || !present(-1)) throw std::logic_error("thk_m2_coefficients: seed pair missing");
    for (const auto& s : pos)
        if (!present(-(s + 1)))
            throw std::logic_error("thk_m2_coefficients: pair partner missing");
    // Lemma 4.1 recursion
    for (size_t k = 2; k < pos.size(); ++k)
        if (pos[k] != 2 * pos[k - 1] + pos[k - 2] + 1)
            throw std::logic_error("thk_m2_coefficients: S recursion failed");
    if (pos.size() >= 2 && pos[1] != 3)
        throw std::logic_error("thk_m2_coefficients: S_2 != 3");
    return pos;
}

bool bound_check(int m) {
    std::vector<BigInt> s = thk_m2_coefficients(m);
    // S_{m-2} < pell(m)/2 - 1, cleared of the division: 2 S + 2 < P_m
    return 2 * s.back() + 2 < pell((unsigned)m);
}

bool scaling_heterogeneity(const Diagram& d, std::uint64_t p, std::uint64_t a) {
    if (a % p == 0)
        throw std::invalid_argument("scaling_heterogeneity: a = 0 leads to a trivial coloring");
    Nullspace ns = nullspace_mod_p(coloring_matrix(d), p);
    if (ns.dimension < 2)
        throw std::invalid_argument("scaling_heterogeneity: not p-colorable");
    auto gens = translation_reduced(ns, (size_t)d.arc_count());
    const auto& base = gens.front();
    Fp fp{p};
    std::vector<std::uint64_t> scaled(base.size());
    for (size_t i = 0; i < base.size(); ++i) scaled[i] = fp.mul(a % p, base[i]);
    if (!valid_coloring(d, scaled, p)) return false;
    return heterogeneous_colors(scaled) == heterogeneous_colors(base);
}

}  // namespace thk
