#include "thk/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "thk/intmatrix.hpp"

namespace thk {

namespace {

// corner -> dart port owning that corner's face (see AnnularMap face orbits:
// the corner between ports q and q+1 at a vertex lies in face_of[(v, q+1)])
int corner_port(char corner) {
    switch (corner) {
        case 'N': return NW;
        case 'W': return SW;
        case 'S': return SE;
        default: return NE;  // 'E'
    }
}

bool connected(const CheckerboardGraph& g) {
    if (g.vertex_count <= 0) return false;
    std::vector<int> uf(g.vertex_count);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto [a, b] : g.edges) uf[find(a)] = find(b);
    for (int v = 1; v < g.vertex_count; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

}  // namespace

std::pair<CheckerboardGraph, CheckerboardGraph> checkerboard_shadings(const Diagram& d) {
    AnnularMap mp = AnnularMap::build(d.m(), d.n());
    int N = mp.N;
    int nf = 0;
    std::vector<int> face = mp.face_of(&nf);
    if (nf != N + 2) throw std::invalid_argument("checkerboard_shadings: diagram not connected");

    // 2-color faces across edges
    std::vector<std::vector<int>> adj(nf);
    for (int dart = 0; dart < 4 * N; ++dart) {
        adj[face[dart]].push_back(face[mp.alpha[dart]]);
    }
    std::vector<int> color(nf, -1);
    std::vector<int> stack = {0};
    color[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else if (color[g] == color[f]) {
                throw std::logic_error("checkerboard_shadings: faces not 2-colorable");
            }
        }
    }

    auto cface = [&](int k, char c) { return face[4 * k + corner_port(c)]; };
    std::vector<std::pair<int, int>> raw[2];
    for (int k = 0; k < N; ++k) {
        int fN = cface(k, 'N'), fS = cface(k, 'S'), fW = cface(k, 'W'), fE = cface(k, 'E');
        if (color[fN] != color[fS] || color[fW] != color[fE] || color[fN] == color[fW])
            throw std::logic_error("checkerboard_shadings: corner coloring broken");
        raw[color[fN]].push_back({fN, fS});
        raw[color[fW]].push_back({fW, fE});
    }

    int bottom = color[cface(0, 'S')];
    CheckerboardGraph out[2];
    for (int c = 0; c < 2; ++c) {
        std::map<int, int> relabel;
        for (auto [a, b] : raw[c]) {
            relabel.emplace(a, 0);
            relabel.emplace(b, 0);
        }
        int idx = 0;
        for (auto& kv : relabel) kv.second = idx++;
        out[c].vertex_count = idx;
        for (auto [a, b] : raw[c]) out[c].edges.push_back({relabel[a], relabel[b]});
    }
    return {out[bottom], out[1 - bottom]};
}

CheckerboardGraph build_checkerboard(const Diagram& d) {
    auto [bottom, other] = checkerboard_shadings(d);
    if (other.vertex_count < bottom.vertex_count) return other;
    return bottom;  // fewer vertices, ties to the bottom-face shading
}

BigInt spanning_tree_count(const CheckerboardGraph& g) {
    if (g.vertex_count <= 0) throw std::invalid_argument("spanning_tree_count: empty graph");
    if (!connected(g)) throw std::invalid_argument("spanning_tree_count: graph not connected");
    int v = g.vertex_count;
    if (v == 1) return 1;
    IntMatrix L(v, v);
    for (auto [a, b] : g.edges) {
        if (a == b) continue;
        L.at(a, a) += 1;
        L.at(b, b) += 1;
        L.at(a, b) -= 1;
        L.at(b, a) -= 1;
    }
    BigInt det = det_bareiss(L.minor_without(v - 1, v - 1));
    return abs(det);
}

namespace {

BigInt del_contract(int nv, std::vector<std::pair<int, int>> edges) {
    // strip loops
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](auto& e) { return e.first == e.second; }),
                edges.end());
    if (edges.empty()) return nv == 1 ? 1 : 0;
    auto [a, b] = edges.back();
    edges.pop_back();
    BigInt deleted = del_contract(nv, edges);
    // contract b into a
    for (auto& e : edges) {
        if (e.first == b) e.first = a;
        if (e.second == b) e.second = a;
        if (e.first > b) --e.first;
        if (e.second > b) --e.second;
    }
    return deleted + del_contract(nv - 1, std::move(edges));
}

}  // namespace

BigInt spanning_trees_bruteforce(const CheckerboardGraph& g) {
    if (g.edges.size() > 20)
        throw std::invalid_argument("spanning_trees_bruteforce: too large (" +
                                    std::to_string(g.edges.size()) + " edges, cap 20)");
    if (g.vertex_count <= 0) throw std::invalid_argument("spanning_trees_bruteforce: empty graph");
    return del_contract(g.vertex_count, g.edges);
}

CheckerboardGraph build_wheel(int n) {
    if (n < 3) throw std::invalid_argument("build_wheel: need n >= 3");
    CheckerboardGraph g;
    g.vertex_count = n + 1;  // 0 = hub
    for (int i = 1; i <= n; ++i) {
        g.edges.push_back({0, i});
        g.edges.push_back({i, i % n + 1});
    }
    return g;
}

CheckerboardGraph build_tensor(int m, int n) {
    if (m % 2 != 0) throw std::invalid_argument("build_tensor: m must be even");
    if (m < 4) throw std::invalid_argument("build_tensor: need m >= 4");
    if (n < 3) throw std::invalid_argument("build_tensor: need n >= 3");
    int k = m / 2;
    CheckerboardGraph g;
    g.vertex_count = n * k;
    auto id = [&](int i, int j) { return i * k + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            g.edges.push_back({id(i, j), id((i + 1) % n, j)});
            if (j + 1 < k) g.edges.push_back({id(i, j), id(i, j + 1)});
        }
    return g;
}

bool graphs_isomorphic(const CheckerboardGraph& a, const CheckerboardGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
    if (a.vertex_count > 10) throw std::invalid_argument("graphs_isomorphic: too large");
    auto canon = [](const CheckerboardGraph& g, const std::vector<int>& perm) {
        std::vector<std::pair<int, int>> es;
        es.reserve(g.edges.size());
        for (auto [x, y] : g.edges) {
            int px = perm.empty() ? x : perm[x], py = perm.empty() ? y : perm[y];
            es.push_back({std::min(px, py), std::max(px, py)});
        }
        std::sort(es.begin(), es.end());
        return es;
    };
    auto target = canon(b, {});
    std::vector<int> perm(a.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (canon(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string graph_json(const CheckerboardGraph& g) {
    nlohmann::ordered_json j;
    j["vertex_count"] = g.vertex_count;
    auto& arr = j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges) arr.push_back({a, b});
    return j.dump();
}

}  // namespace thk
