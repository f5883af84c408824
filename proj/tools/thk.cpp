// Command-line front end: sequence lookups, determinants, colorings,
// transfer-matrix polynomials, and the G-vs-determinant survey.
// Exit codes: 0 ok, 1 mathematical disagreement, 2 usage error.
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "thk/braid.hpp"
#include "thk/coloring.hpp"
#include "thk/determinant.hpp"
#include "thk/graphs.hpp"
#include "thk/numbertheory.hpp"
#include "thk/polynomial.hpp"
#include "thk/sequences.hpp"
#include "thk/survey.hpp"
#include "thk/transfer.hpp"

using nlohmann::ordered_json;
using namespace thk;

namespace {

// requested thread count, bounded by the THK_THREADS env var when set
int resolve_threads(int requested) {
    int n = requested > 0 ? requested : omp_get_max_threads();
    if (const char* e = std::getenv("THK_THREADS")) {
        int cap = std::atoi(e);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::none: return "none";
        case WitnessKind::unit: return "unit";
        case WitnessKind::factor: return "factor";
        case WitnessKind::square_root: return "square-root";
        case WitnessKind::fermat_base: return "fermat-base";
    }
    return "none";
}

int cmd_seq(const std::string& name, int a, int b, int row) {
    if (name == "delannoy") {
        if (row >= 0) {
            std::string sep;
            for (const BigInt& v : delannoy_row((unsigned)row)) {
                std::cout << sep << to_decimal(v);
                sep = " ";
            }
            std::cout << "\n";
            return 0;
        }
        if (a < 0 || b < 0) throw std::invalid_argument("seq delannoy needs --row R or two indices i k");
        std::cout << to_decimal(delannoy((unsigned)a, (unsigned)b)) << "\n";
        return 0;
    }
    if (a < 1) throw std::invalid_argument("seq " + name + " needs a positive index");
    BigInt v;
    if (name == "pell")
        v = pell((unsigned)a);
    else if (name == "lucas")
        v = lucas((unsigned)a);
    else if (name == "fib" || name == "fibonacci")
        v = fibonacci((unsigned)a);
    else
        throw std::invalid_argument("unknown sequence: " + name);
    std::cout << to_decimal(v) << "\n";
    return 0;
}

int cmd_det(int m, int n, const std::string& method, bool json) {
    Diagram d = build_thk(m, n);
    bool want_all = method == "all";
    std::vector<std::pair<std::string, BigInt>> results;
    if (want_all || method == "minor")
        results.emplace_back(det_method_name(DetMethod::coloring_minor), knot_determinant(d).value);
    if (want_all || method == "trees")
        results.emplace_back(det_method_name(DetMethod::matrix_tree),
                             spanning_tree_count(build_checkerboard(d)));
    if (method == "closed" || (want_all && m == 3))
        results.emplace_back(det_method_name(DetMethod::closed_form), det_closed_form_m3(n));
    if (method == "trig" || (want_all && m % 2 == 0 && m >= 4 && n >= 3))
        results.emplace_back(det_method_name(DetMethod::trig_product), trig_count(m, n));
    if (results.empty()) throw std::invalid_argument("method '" + method + "' not applicable here");

    bool agree = true;
    for (const auto& r : results) agree = agree && r.second == results[0].second;
    if (json) {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["determinant"] = to_decimal(results[0].second);
        auto& ms = j["methods"] = ordered_json::object();
        for (const auto& r : results) ms[r.first] = to_decimal(r.second);
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else if (agree) {
        std::cout << to_decimal(results[0].second) << "\n";
    } else {
        for (const auto& r : results)
            std::cout << r.first << " " << to_decimal(r.second) << "\n";
    }
    if (!agree) {
        std::cerr << "determinant methods disagree\n";
        return 1;
    }
    return 0;
}

int cmd_g(int m, int n, bool json) {
    GValue gv = G(m, n);
    if (json) {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["g"] = to_decimal(gv.value);
        j["square_ok"] = gv.square_ok;
        j["square_root"] = to_decimal(gv.square_root);
        j["cofactor"] = to_decimal(gv.cofactor);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_decimal(gv.value) << "\n";
    }
    return 0;
}

int cmd_poly(int m, int power) {
    IntPolynomial p = dm(m);
    if (power > 1) p = power_poly(p, power);
    std::string sep;
    for (int k = 0; k <= p.degree(); ++k) {
        std::cout << sep << to_decimal(p.coeff(k));
        sep = " ";
    }
    std::cout << "\n";
    return 0;
}

int cmd_graph(int m, int n, bool trees) {
    Diagram d = build_thk(m, n);
    CheckerboardGraph g = build_checkerboard(d);
    ordered_json j = ordered_json::parse(graph_json(g));
    if (trees) j["spanning_trees"] = to_decimal(spanning_tree_count(g));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_color(int m, int n, long long p, std::uint64_t cap, int threads, bool json) {
    Diagram d = build_thk(m, n);
    if (p < 2) throw std::invalid_argument("color: p must be a prime >= 2");
    Nullspace ns = nullspace_mod_p(coloring_matrix(d), (std::uint64_t)p);
    ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["p"] = p;
    j["nullspace_dimension"] = ns.dimension;
    j["colorable"] = ns.dimension > 1;
    int rc = 0;
    if (ns.dimension > 1) {
        HKOptions opt;
        opt.threads = resolve_threads(threads);
        opt.cap = cap;
        HKVerdict v = hk_verify(d, (std::uint64_t)p, opt);
        j["colorings_checked"] = to_decimal(v.colorings_checked);
        j["complete"] = v.complete;
        j["heterogeneous"] = v.heterogeneous;
        if (v.witness) {
            ordered_json w;
            w["arc_a"] = v.witness->arc_a;
            w["arc_b"] = v.witness->arc_b;
            w["color"] = v.witness->color;
            w["class_index"] = v.witness->class_index;
            j["witness"] = w;
            rc = 1;
        }
        if (!json)
            std::cout << "p=" << p << ": " << to_decimal(v.colorings_checked)
                      << " colorings checked" << (v.complete ? "" : " (capped)") << ", "
                      << (v.heterogeneous ? "all heterogeneous"
                                          : "color repeat found (arcs " +
                                                std::to_string(v.witness->arc_a) + ", " +
                                                std::to_string(v.witness->arc_b) + ")")
                      << "\n";
    } else if (!json) {
        std::cout << "p=" << p << ": not colorable (nullspace dimension 1)\n";
    }
    if (json) std::cout << j.dump(2) << "\n";
    return rc;
}

int cmd_hk(int m, int n, int threads, bool json) {
    Diagram d = build_thk(m, n);
    if (d.components() != 1)
        throw std::invalid_argument("hk: THK(m,n) is a link, not a knot (gcd > 1)");
    BigInt det = knot_determinant(d).value;
    PrimalityVerdict pv = classify_prime(det);
    if (!pv.is_prime_ish())
        throw std::invalid_argument("hk: determinant " + to_decimal(det) +
                                    " is composite; pick p explicitly with `color`");
    if (!det.fits_ulong_p() || det > (BigInt(1) << 40))
        throw std::invalid_argument("hk: determinant " + to_decimal(det) +
                                    " too large to enumerate");
    HKOptions opt;
    opt.threads = resolve_threads(threads);
    HKVerdict v = hk_verify(d, det.get_ui(), opt);
    if (json) {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["p"] = v.p;
        j["nullspace_dimension"] = v.nullspace_dimension;
        j["colorings_checked"] = to_decimal(v.colorings_checked);
        j["heterogeneous"] = v.heterogeneous;
        j["status"] = v.heterogeneous ? "verified" : "violated";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (v.heterogeneous ? "verified" : "violated") << ": p=" << v.p << ", "
                  << to_decimal(v.colorings_checked) << " colorings checked\n";
    }
    return v.heterogeneous ? 0 : 1;
}

int cmd_prime(const std::string& decimal, bool json) {
    BigInt v;
    try {
        v = BigInt(decimal);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("prime: not a decimal integer: " + decimal);
    }
    PrimalityVerdict pv = classify_prime(v);
    if (json) {
        ordered_json j;
        j["value"] = to_decimal(v);
        j["status"] = pv.status_str();
        j["rounds"] = pv.rounds;
        j["witness_kind"] = witness_kind_name(pv.witness_kind);
        if (pv.witness_kind != WitnessKind::none) j["witness"] = to_decimal(pv.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_decimal(v) << ": " << pv.status_str();
        if (pv.witness_kind == WitnessKind::factor)
            std::cout << " (factor " << to_decimal(pv.witness) << ")";
        else if (pv.witness_kind == WitnessKind::square_root)
            std::cout << " (square of " << to_decimal(pv.witness) << ")";
        else if (pv.witness_kind == WitnessKind::fermat_base)
            std::cout << " (Miller-Rabin base " << to_decimal(pv.witness) << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_pell_primes(int max_m, bool json) {
    if (max_m < 2 || max_m > 2000)
        throw std::invalid_argument("pell-primes: max-m must be in [2, 2000]");
    std::vector<int> hits = pell_prime_scan(max_m);
    ordered_json arr = ordered_json::array();
    for (int m : hits) {
        BigInt pm = pell((unsigned)m);
        PrimalityVerdict pv = classify_prime(pm);
        if (json) {
            ordered_json j;
            j["m"] = m;
            j["pell"] = to_decimal(pm);
            j["status"] = pv.status_str();
            arr.push_back(std::move(j));
        } else {
            std::cout << "m=" << m << " P_m=" << to_decimal(pm) << " (" << pv.status_str()
                      << ")\n";
        }
    }
    if (json) std::cout << arr.dump(2) << "\n";
    return 0;
}

int cmd_verify_gdet(int max_m, int max_n, int threads, bool json) {
    auto rows = run_verify_gdet(max_m, max_n, resolve_threads(threads));
    if (json) {
        std::cout << gdet_json(rows);
    } else {
        for (const auto& r : rows)
            std::cout << "m=" << r.m << " n=" << r.n << " det=" << to_decimal(r.det)
                      << " g=" << to_decimal(r.g) << (r.agree ? " agree" : " DISAGREE") << "\n";
    }
    return gdet_ok(rows) ? 0 : 1;
}

int cmd_survey(int max_m, int max_n, const std::string& format, int threads, bool force,
               long threshold) {
    SurveyOptions opt;
    opt.threads = resolve_threads(threads);
    opt.force_hk = force;
    if (threshold >= 0) opt.hk_threshold = BigInt(threshold);
    auto recs = run_survey(max_m, max_n, opt);
    if (format == "csv")
        std::cout << survey_csv(recs);
    else if (format == "json")
        std::cout << survey_json(recs);
    else
        std::cout << survey_table(recs);
    return survey_ok(recs) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turk's head knot determinants, colorings, and transfer polynomials"};
    app.require_subcommand(1);

    auto* seq = app.add_subcommand("seq", "sequence values (pell, lucas, fib, delannoy)");
    std::string seq_name;
    int seq_a = -1, seq_b = -1, seq_row = -1;
    seq->add_option("name", seq_name, "sequence name")->required();
    seq->add_option("index", seq_a, "index (or Delannoy row when two given)");
    seq->add_option("col", seq_b, "Delannoy column");
    seq->add_option("--row", seq_row, "print a whole Delannoy row");

    auto* det = app.add_subcommand("det", "knot/link determinant of THK(m,n)");
    int det_m = 0, det_n = 0;
    std::string det_method = "all";
    bool det_json = false;
    det->add_option("--m", det_m, "strand count")->required();
    det->add_option("--n", det_n, "braid repetitions")->required();
    det->add_option("--method", det_method, "all|minor|trees|closed|trig")
        ->check(CLI::IsMember({"all", "minor", "trees", "closed", "trig"}));
    det->add_flag("--json", det_json);

    auto* g = app.add_subcommand("g", "conjectural determinant G(m,n), odd m");
    int g_m = 0, g_n = 0;
    bool g_json = false;
    g->add_option("--m", g_m)->required();
    g->add_option("--n", g_n)->required();
    g->add_flag("--json", g_json);

    auto* poly = app.add_subcommand("poly", "coefficients of d_m (ascending), optionally root-powered");
    int poly_m = 0, poly_power = 1;
    poly->add_option("--m", poly_m)->required();
    poly->add_option("--power", poly_power, "replace roots by their n-th powers");

    auto* graph = app.add_subcommand("graph", "checkerboard graph of THK(m,n) as JSON");
    int graph_m = 0, graph_n = 0;
    bool graph_trees = false;
    graph->add_option("--m", graph_m)->required();
    graph->add_option("--n", graph_n)->required();
    graph->add_flag("--trees", graph_trees, "include the spanning-tree count");

    auto* color = app.add_subcommand("color", "Fox p-colorings of THK(m,n)");
    int color_m = 0, color_n = 0, color_threads = 0;
    long long color_p = 0;
    std::uint64_t color_cap = 0;
    bool color_json = false;
    color->add_option("--m", color_m)->required();
    color->add_option("--n", color_n)->required();
    color->add_option("--p", color_p, "prime modulus")->required();
    color->add_option("--enumerate-cap", color_cap, "stop after this many colorings");
    color->add_option("--threads", color_threads);
    color->add_flag("--json", color_json);

    auto* hk = app.add_subcommand("hk", "heterogeneity check at p = determinant (prime)");
    int hk_m = 0, hk_n = 0, hk_threads = 0;
    bool hk_json = false;
    hk->add_option("--m", hk_m)->required();
    hk->add_option("--n", hk_n)->required();
    hk->add_option("--threads", hk_threads);
    hk->add_flag("--json", hk_json);

    auto* prime = app.add_subcommand("prime", "primality verdict with witness");
    std::string prime_value;
    bool prime_json = false;
    prime->add_option("value", prime_value, "decimal integer")->required();
    prime->add_flag("--json", prime_json);

    auto* pellp = app.add_subcommand("pell-primes", "indices m with P_m (probably) prime");
    int pellp_max = 200;
    bool pellp_json = false;
    pellp->add_option("--max-m", pellp_max);
    pellp->add_flag("--json", pellp_json);

    auto* vg = app.add_subcommand("verify-gdet", "G(m,n) vs determinant over a coprime grid");
    int vg_max_m = 13, vg_max_n = 13, vg_threads = 0;
    bool vg_json = false;
    vg->add_option("--max-m", vg_max_m);
    vg->add_option("--max-n", vg_max_n);
    vg->add_option("--threads", vg_threads);
    vg->add_flag("--json", vg_json);

    auto* survey = app.add_subcommand("survey", "full (m,n) grid: determinant, G, primality, coloring check");
    int sv_max_m = 8, sv_max_n = 8, sv_threads = 0;
    std::string sv_format = "table";
    bool sv_force = false;
    survey->add_option("--max-m", sv_max_m);
    survey->add_option("--max-n", sv_max_n);
    survey->add_option("--format", sv_format)->check(CLI::IsMember({"table", "csv", "json"}));
    survey->add_option("--threads", sv_threads);
    survey->add_flag("--force", sv_force, "enumerate colorings past the size threshold");
    long sv_threshold = -1;
    survey->add_option("--threshold", sv_threshold,
                       "largest prime determinant enumerated without --force (default 1000000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*seq) return cmd_seq(seq_name, seq_a, seq_b, seq_row);
        if (*det) return cmd_det(det_m, det_n, det_method, det_json);
        if (*g) return cmd_g(g_m, g_n, g_json);
        if (*poly) return cmd_poly(poly_m, poly_power);
        if (*graph) return cmd_graph(graph_m, graph_n, graph_trees);
        if (*color) return cmd_color(color_m, color_n, color_p, color_cap, color_threads, color_json);
        if (*hk) return cmd_hk(hk_m, hk_n, hk_threads, hk_json);
        if (*prime) return cmd_prime(prime_value, prime_json);
        if (*pellp) return cmd_pell_primes(pellp_max, pellp_json);
        if (*vg) return cmd_verify_gdet(vg_max_m, vg_max_n, vg_threads, vg_json);
        if (*survey)
            return cmd_survey(sv_max_m, sv_max_n, sv_format, sv_threads, sv_force, sv_threshold);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
