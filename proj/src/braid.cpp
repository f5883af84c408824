#include "thk/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace thk {

BraidWord thk_braid_word(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("thk_braid_word: need m, n >= 2");
    BraidWord w;
    w.strands = m;
    w.letters.reserve((size_t)n * (m - 1));
    for (int c = 0; c < n; ++c)
        for (int g = 1; g < m; ++g) w.letters.push_back({g, g % 2 == 1 ? +1 : -1});
    return w;
}

namespace {

// crossings touching a strand row, in slot order, tagged with which side of
// the crossing the row is (lower row of generator j = 'low', upper = 'up')
struct RowVisit {
    int k;
    bool low;
};

std::vector<std::vector<RowVisit>> visits_by_row(int m, int n) {
    int N = n * (m - 1);
    std::vector<std::vector<RowVisit>> byrow(m);
    for (int k = 0; k < N; ++k) {
        int j = k % (m - 1);
        byrow[j].push_back({k, true});
        byrow[j + 1].push_back({k, false});
    }
    // slot order within a row needs a stable merge: entries were appended in
    // slot order already (k increasing), except rows hit twice per column
    // interleave 'up' before 'low' (generator j-1 precedes j).  Sorting by k
    // settles it since the two visits have distinct k.
    for (auto& row : byrow)
        std::sort(row.begin(), row.end(), [](const RowVisit& a, const RowVisit& b) { return a.k < b.k; });
    return byrow;
}

}  // namespace

AnnularMap AnnularMap::build(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("AnnularMap: need m, n >= 2");
    AnnularMap mp;
    mp.m = m;
    mp.n = n;
    mp.N = n * (m - 1);
    mp.alpha.assign(4 * mp.N, -1);
    auto byrow = visits_by_row(m, n);
    for (int r = 0; r < m; ++r) {
        const auto& lst = byrow[r];
        size_t L = lst.size();
        for (size_t i = 0; i < L; ++i) {
            const RowVisit& a = lst[i];
            const RowVisit& b = lst[(i + 1) % L];
            int da = 4 * a.k + (a.low ? SE : NE);  // east port of a at this row
            int db = 4 * b.k + (b.low ? SW : NW);  // west port of b
            mp.alpha[da] = db;
            mp.alpha[db] = da;
        }
    }
    for (int d = 0; d < 4 * mp.N; ++d)
        if (mp.alpha[d] < 0) throw std::logic_error("AnnularMap: unmatched dart");
    return mp;
}

std::vector<int> AnnularMap::face_of(int* face_count) const {
    std::vector<int> face(4 * N, -1);
    int nf = 0;
    for (int d0 = 0; d0 < 4 * N; ++d0) {
        if (face[d0] >= 0) continue;
        int cur = d0;
        while (face[cur] < 0) {
            face[cur] = nf;
            cur = sigma(alpha[cur]);
        }
        ++nf;
    }
    if (face_count) *face_count = nf;
    return face;
}

Diagram build_thk(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("build_thk: need m, n >= 2");
    AnnularMap mp = AnnularMap::build(m, n);
    int N = mp.N;
    auto byrow = visits_by_row(m, n);

    Diagram d;
    d.m_ = m;
    d.n_ = n;
    d.crossings_.assign(N, Crossing{});
    d.entry_arcs_.assign(m, -1);

    auto positive = [&](int k) { return (k % (m - 1)) % 2 == 0; };

    // component walk starting darts: the west in-dart of the first crossing of
    // each strand row (= the segment crossing the angle-0 column boundary)
    std::vector<int> starts(m);
    for (int r = 0; r < m; ++r) {
        const RowVisit& v = byrow[r].front();
        starts[r] = 4 * v.k + (v.low ? SW : NW);
    }

    struct Passage {
        int k, in_port;
        bool over;
    };
    std::vector<char> visited(4 * N, 0);
    std::vector<std::vector<Passage>> comps;
    for (int st : starts) {
        if (visited[st]) continue;
        std::vector<Passage> comp;
        int cur = st;
        while (!visited[cur]) {
            visited[cur] = 1;
            int k = cur / 4, pin = cur & 3;
            // positive crossing: the SW->NE strand passes over
            bool over = (pin == SW) == positive(k);
            comp.push_back({k, pin, over});
            int pout = (pin == SW) ? NE : SE;
            cur = mp.alpha[4 * k + pout];
        }
        comps.push_back(std::move(comp));
    }
    int visited_in = 0;
    for (int k = 0; k < N; ++k) visited_in += visited[4 * k + SW] + visited[4 * k + NW];
    if (visited_in != 2 * N) throw std::logic_error("build_thk: traversal missed passages");

    // alternation along every component (cyclically)
    for (const auto& comp : comps)
        for (size_t i = 0; i < comp.size(); ++i)
            if (comp[i].over == comp[(i + 1) % comp.size()].over)
                throw std::logic_error("build_thk: diagram not alternating");

    // arcs: one per under-passage; rotate each component to start at its
    // first under-passage, then the running arc advances after each under
    std::vector<int> arc_of_indart(4 * N, -1);
    int arc_count = 0;
    for (const auto& comp : comps) {
        size_t idx0 = 0;
        while (comp[idx0].over) ++idx0;
        size_t L = comp.size();
        int nunder = 0;
        for (const auto& p : comp) nunder += !p.over;
        int first_arc = arc_count, last_arc = arc_count + nunder - 1;
        int cur = last_arc, seen_under = 0;
        for (size_t s = 0; s < L; ++s) {
            const Passage& p = comp[(idx0 + s) % L];
            arc_of_indart[4 * p.k + p.in_port] = cur;
            if (!p.over) {
                d.crossings_[p.k].under_in = cur;
                ++seen_under;
                cur = first_arc + seen_under - 1;
                d.crossings_[p.k].under_out = cur;
            } else {
                d.crossings_[p.k].over = cur;
            }
        }
        arc_count += nunder;
    }
    if (arc_count != N) throw std::logic_error("build_thk: arc count mismatch");
    for (int k = 0; k < N; ++k)
        if (d.crossings_[k].over < 0 || d.crossings_[k].under_in < 0)
            throw std::logic_error("build_thk: crossing missing a passage");

    for (int r = 0; r < m; ++r) d.entry_arcs_[r] = arc_of_indart[starts[r]];
    d.components_ = (int)comps.size();
    if (d.components_ != std::gcd(m, n))
        throw std::logic_error("build_thk: component count disagrees with gcd");
    return d;
}

int component_count(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("component_count: need m, n >= 2");
    return build_thk(m, n).components();  // build_thk asserts == gcd(m,n)
}

IntMatrix coloring_matrix(const Diagram& d) {
    int N = d.crossing_count();
    IntMatrix M(N, N);
    for (int r = 0; r < N; ++r) {
        const Crossing& c = d.crossings()[r];
        M.at(r, c.over) += 2;
        M.at(r, c.under_in) -= 1;
        M.at(r, c.under_out) -= 1;
    }
    return M;
}

std::string diagram_json(const Diagram& d) {
    nlohmann::ordered_json j;
    j["m"] = d.m();
    j["n"] = d.n();
    auto& arr = j["crossings"] = nlohmann::ordered_json::array();
    for (const Crossing& c : d.crossings()) arr.push_back({c.over, c.under_in, c.under_out});
    return j.dump();
}

}  // namespace thk
