// Timing comparison of the serial reference paths against the OpenMP ones:
// coloring enumeration on single knots and the full survey grid.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "thk/braid.hpp"
#include "thk/coloring.hpp"
#include "thk/sequences.hpp"
#include "thk/survey.hpp"

using namespace thk;

namespace {

double time_s(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, int threads) {
    std::printf("%-28s serial %8.3fs   %2d threads %8.3fs   speedup %.2fx\n", name, serial,
                threads, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    int threads = omp_get_max_threads();
    std::printf("hardware threads: %d\n\n", threads);

    for (int m : {11, 13}) {
        Diagram d = build_thk(m, 2);
        std::uint64_t p = pell((unsigned)m).get_ui();
        HKOptions serial_opt, par_opt;
        serial_opt.threads = 1;
        par_opt.threads = threads;
        HKVerdict vs, vp;
        double ts = time_s([&] { vs = hk_verify(d, p, serial_opt); });
        double tp = time_s([&] { vp = hk_verify(d, p, par_opt); });
        if (vs.heterogeneous != vp.heterogeneous) {
            std::fprintf(stderr, "verdict mismatch on THK(%d,2)\n", m);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "hk THK(%d,2) p=%llu", m, (unsigned long long)p);
        report(label, ts, tp, threads);
    }

    {
        SurveyOptions serial_opt, par_opt;
        serial_opt.threads = 1;
        par_opt.threads = threads;
        std::vector<SurveyRecord> rs, rp;
        double ts = time_s([&] { rs = run_survey_serial(9, 9, serial_opt); });
        double tp = time_s([&] { rp = run_survey(9, 9, par_opt); });
        if (survey_csv(rs) != survey_csv(rp)) {
            std::fprintf(stderr, "survey outputs differ between serial and parallel\n");
            return 1;
        }
        report("survey 9x9", ts, tp, threads);
    }
    return 0;
}
