#include "thk/survey.hpp"

#include <omp.h>

#include <exception>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "thk/braid.hpp"
#include "thk/coloring.hpp"
#include "thk/determinant.hpp"
#include "thk/transfer.hpp"

namespace thk {

const char* hk_status_name(HKStatus s) {
    switch (s) {
        case HKStatus::verified: return "verified";
        case HKStatus::violated: return "violated";
        case HKStatus::not_applicable: return "not-applicable";
        case HKStatus::skipped: return "skipped";
    }
    throw std::logic_error("bad HKStatus");
}

namespace {

HKStatus hk_status_from_name(const std::string& s) {
    for (HKStatus st : {HKStatus::verified, HKStatus::violated,
                        HKStatus::not_applicable, HKStatus::skipped})
        if (s == hk_status_name(st)) return st;
    throw std::invalid_argument("unknown hk status: " + s);
}

// enumeration work scales with p itself (class count p^(dim-1) - 1, and the
// prime case has dim = 2); past this nothing finishes in reasonable time and
// Fp arithmetic would need > 64 bits anyway
const BigInt kHkHardCap = BigInt(1) << 40;

SurveyRecord survey_cell(int m, int n, const SurveyOptions& opt) {
    Diagram d = build_thk(m, n);
    SurveyRecord r;
    r.m = m;
    r.n = n;
    r.components = component_count(m, n);
    r.determinant = knot_determinant(d).value;
    if (m % 2 == 1) {
        r.g_value = G(m, n).value;
        if (std::gcd(m, n) == 1) r.agree = (*r.g_value == r.determinant);
    }
    r.det_prime = classify_prime(r.determinant);

    bool knot = r.components == 1;
    if (!knot || !r.det_prime.is_prime_ish() || r.determinant < 3) {
        r.hk_status = HKStatus::not_applicable;
    } else if ((r.determinant > opt.hk_threshold && !opt.force_hk) ||
               r.determinant > kHkHardCap) {
        r.hk_status = HKStatus::skipped;
    } else {
        HKOptions ho;
        ho.threads = 1;  // cells are already running in parallel
        HKVerdict v = hk_verify(d, r.determinant.get_ui(), ho);
        r.hk_status = v.heterogeneous ? HKStatus::verified : HKStatus::violated;
    }
    return r;
}

std::vector<std::pair<int, int>> survey_grid(int max_m, int max_n) {
    if (max_m < 2 || max_n < 2) throw std::invalid_argument("survey needs max_m, max_n >= 2");
    std::vector<std::pair<int, int>> cells;
    for (int m = 2; m <= max_m; ++m)
        for (int n = 2; n <= max_n; ++n) cells.emplace_back(m, n);
    return cells;
}

}  // namespace

std::vector<SurveyRecord> run_survey(int max_m, int max_n, const SurveyOptions& opt) {
    auto cells = survey_grid(max_m, max_n);
    std::vector<SurveyRecord> out(cells.size());
    int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long i = 0; i < (long long)cells.size(); ++i) {
        try {
            out[i] = survey_cell(cells[i].first, cells[i].second, opt);
        } catch (...) {
#pragma omp critical(thk_survey_err)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<SurveyRecord> run_survey_serial(int max_m, int max_n, const SurveyOptions& opt) {
    auto cells = survey_grid(max_m, max_n);
    std::vector<SurveyRecord> out;
    out.reserve(cells.size());
    for (auto [m, n] : cells) out.push_back(survey_cell(m, n, opt));
    return out;
}

bool survey_ok(const std::vector<SurveyRecord>& recs) {
    for (const auto& r : recs) {
        if (r.agree && !*r.agree) return false;
        if (r.hk_status == HKStatus::violated) return false;
    }
    return true;
}

std::string survey_table(const std::vector<SurveyRecord>& recs) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(6) << "comp"
       << std::setw(24) << "determinant" << std::setw(24) << "g_value" << std::setw(7)
       << "agree" << std::setw(16) << "det_prime" << "hk_status\n";
    for (const auto& r : recs) {
        os << std::left << std::setw(4) << r.m << std::setw(4) << r.n << std::setw(6)
           << r.components << std::setw(24) << to_decimal(r.determinant) << std::setw(24)
           << (r.g_value ? to_decimal(*r.g_value) : "-") << std::setw(7)
           << (r.agree ? (*r.agree ? "yes" : "NO") : "-") << std::setw(16)
           << r.det_prime.status_str() << hk_status_name(r.hk_status) << "\n";
    }
    return os.str();
}

std::string survey_csv(const std::vector<SurveyRecord>& recs) {
    std::ostringstream os;
    os << "m,n,components,determinant,g_value,agree,det_prime,hk_status\n";
    for (const auto& r : recs) {
        os << r.m << ',' << r.n << ',' << r.components << ',' << to_decimal(r.determinant)
           << ',' << (r.g_value ? to_decimal(*r.g_value) : "") << ','
           << (r.agree ? (*r.agree ? "true" : "false") : "") << ',' << r.det_prime.status_str()
           << ',' << hk_status_name(r.hk_status) << "\n";
    }
    return os.str();
}

std::string survey_json(const std::vector<SurveyRecord>& recs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : recs) {
        nlohmann::ordered_json j;
        j["m"] = r.m;
        j["n"] = r.n;
        j["components"] = r.components;
        j["determinant"] = to_decimal(r.determinant);
        if (r.g_value) j["g_value"] = to_decimal(*r.g_value);
        if (r.agree) j["agree"] = *r.agree;
        j["det_prime"] = r.det_prime.status_str();
        j["hk_status"] = hk_status_name(r.hk_status);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

namespace {

// only primality status survives serialization; witness data does not
PrimalityVerdict verdict_from_status(const BigInt& value, const std::string& s) {
    PrimalityVerdict v;
    v.value = value;
    if (s == "prime")
        v.status = PrimeStatus::prime;
    else if (s == "probable-prime")
        v.status = PrimeStatus::probable_prime;
    else if (s == "composite")
        v.status = PrimeStatus::composite;
    else
        throw std::invalid_argument("unknown primality status: " + s);
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::vector<SurveyRecord> survey_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty csv");
    if (split_csv_line(line) !=
        std::vector<std::string>{"m", "n", "components", "determinant", "g_value", "agree",
                                 "det_prime", "hk_status"})
        throw std::invalid_argument("unexpected csv header: " + line);
    std::vector<SurveyRecord> recs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 8) throw std::invalid_argument("bad csv row: " + line);
        SurveyRecord r;
        r.m = std::stoi(f[0]);
        r.n = std::stoi(f[1]);
        r.components = std::stoi(f[2]);
        r.determinant = BigInt(f[3]);
        if (!f[4].empty()) r.g_value = BigInt(f[4]);
        if (!f[5].empty()) r.agree = (f[5] == "true");
        r.det_prime = verdict_from_status(r.determinant, f[6]);
        r.hk_status = hk_status_from_name(f[7]);
        recs.push_back(std::move(r));
    }
    return recs;
}

std::vector<SurveyRecord> survey_from_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("survey json must be an array");
    std::vector<SurveyRecord> recs;
    for (const auto& j : arr) {
        SurveyRecord r;
        r.m = j.at("m").get<int>();
        r.n = j.at("n").get<int>();
        r.components = j.at("components").get<int>();
        r.determinant = BigInt(j.at("determinant").get<std::string>());
        if (j.contains("g_value")) r.g_value = BigInt(j.at("g_value").get<std::string>());
        if (j.contains("agree")) r.agree = j.at("agree").get<bool>();
        r.det_prime = verdict_from_status(r.determinant, j.at("det_prime").get<std::string>());
        r.hk_status = hk_status_from_name(j.at("hk_status").get<std::string>());
        recs.push_back(std::move(r));
    }
    return recs;
}

std::vector<GdetRow> run_verify_gdet(int max_m, int max_n, int threads) {
    if (max_m < 3 || max_n < 2) throw std::invalid_argument("verify-gdet needs max_m >= 3, max_n >= 2");
    std::vector<std::pair<int, int>> cells;
    for (int m = 3; m <= max_m; m += 2)
        for (int n = 2; n <= max_n; ++n)
            if (std::gcd(m, n) == 1) cells.emplace_back(m, n);
    std::vector<GdetRow> rows(cells.size());
    int nt = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long i = 0; i < (long long)cells.size(); ++i) {
        try {
            auto [m, n] = cells[i];
            Agreement a = verify_G_equals_det(m, n);
            GValue gv = G(m, n);
            GdetRow& row = rows[i];
            row.m = m;
            row.n = n;
            row.det = a.det;
            row.g = a.g;
            row.agree = a.agree;
            row.det_is_prime = classify_prime(a.det).is_prime_ish();
            row.square_witness = gv.square_root;
        } catch (...) {
#pragma omp critical(thk_gdet_err)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return rows;
}

std::string gdet_json(const std::vector<GdetRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["m"] = r.m;
        j["n"] = r.n;
        j["det"] = to_decimal(r.det);
        j["g"] = to_decimal(r.g);
        j["agree"] = r.agree;
        j["det_is_prime"] = r.det_is_prime;
        j["square_witness"] = to_decimal(r.square_witness);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

bool gdet_ok(const std::vector<GdetRow>& rows) {
    for (const auto& r : rows)
        if (!r.agree) return false;
    return true;
}

}  // namespace thk
