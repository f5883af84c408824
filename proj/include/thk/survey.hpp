#pragma once
#include <optional>
#include <string>
#include <vector>

#include "thk/bigint.hpp"
#include "thk/numbertheory.hpp"

namespace thk {

enum class HKStatus { verified, violated, not_applicable, skipped };

const char* hk_status_name(HKStatus s);

struct SurveyRecord {
    int m = 0, n = 0, components = 0;
    BigInt determinant;
    std::optional<BigInt> g_value;  // present iff m odd
    std::optional<bool> agree;      // present iff g_value and gcd(m,n) = 1
    PrimalityVerdict det_prime;
    HKStatus hk_status = HKStatus::not_applicable;
};

struct SurveyOptions {
    int threads = 0;            // 0 = runtime default
    bool force_hk = false;      // enumerate colorings even above the threshold
    BigInt hk_threshold = 1000000;  // prime determinants above this skip enumeration
};

// one record per (m,n) pair, m-major order, m,n in [2, max]
std::vector<SurveyRecord> run_survey(int max_m, int max_n, const SurveyOptions& opt = {});

// single-threaded reference producing identical records
std::vector<SurveyRecord> run_survey_serial(int max_m, int max_n, const SurveyOptions& opt = {});

// no G-vs-determinant disagreements and no heterogeneity violations
bool survey_ok(const std::vector<SurveyRecord>& recs);

std::string survey_table(const std::vector<SurveyRecord>& recs);
std::string survey_csv(const std::vector<SurveyRecord>& recs);
std::string survey_json(const std::vector<SurveyRecord>& recs);
std::vector<SurveyRecord> survey_from_csv(const std::string& text);
std::vector<SurveyRecord> survey_from_json(const std::string& text);

struct GdetRow {
    int m = 0, n = 0;
    BigInt det, g;
    bool agree = false;
    bool det_is_prime = false;
    BigInt square_witness;
};

// odd m in [3, max_m], n in [2, max_n], gcd(m,n) = 1
std::vector<GdetRow> run_verify_gdet(int max_m, int max_n, int threads = 0);
std::string gdet_json(const std::vector<GdetRow>& rows);
bool gdet_ok(const std::vector<GdetRow>& rows);

}  // namespace thk
