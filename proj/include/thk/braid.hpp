#pragma once
#include <string>
#include <vector>

#include "thk/intmatrix.hpp"

namespace thk {

struct BraidLetter {
    int generator;  // 1-based, in 1..strands-1
    int sign;       // +1 or -1
};

struct BraidWord {
    int strands;
    std::vector<BraidLetter> letters;
};

// (s1 s2^-1 s3 s4^-1 ...)^n on m strands: signs alternate with generator parity.
BraidWord thk_braid_word(int m, int n);

// Annular-grid combinatorial map of the braid closure.  Crossing k sits at
// column k/(m-1), generator j = k%(m-1) (0-based; spans strand rows j, j+1).
// Darts are (crossing, port) encoded 4k+p with ports CCW: NE=0, NW=1, SW=2, SE=3.
// alpha pairs dart ends of each edge; faces come from the orbit of sigma∘alpha
// with sigma the CCW port rotation.
struct AnnularMap {
    int m = 0, n = 0, N = 0;
    std::vector<int> alpha;  // size 4N

    static AnnularMap build(int m, int n);
    static int sigma(int d) { return (d & ~3) | ((d + 1) & 3); }

    // face id of every dart (faces = orbits of sigma∘alpha); count = N+2
    std::vector<int> face_of(int* face_count = nullptr) const;
};

enum Port { NE = 0, NW = 1, SW = 2, SE = 3 };

struct Crossing {
    int over = -1, under_in = -1, under_out = -1;
};

// Closure of the alternating braid word.  Arcs are numbered per component in
// traversal order (components started from strand rows in ascending order,
// each component's arc 0 beginning at its first under-passage).  One arc per
// crossing: arc_count == crossing_count.
class Diagram {
  public:
    int m() const { return m_; }
    int n() const { return n_; }
    int crossing_count() const { return (int)crossings_.size(); }
    int arc_count() const { return (int)crossings_.size(); }
    int components() const { return components_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    // arc carried by strand `row` across the angle-0 column boundary
    int entry_arc(int row) const { return entry_arcs_.at(row); }
    // crossing sign from generator parity: 0-based even generator <=> positive
    bool positive(int k) const { return (k % (m_ - 1)) % 2 == 0; }

    friend Diagram build_thk(int m, int n);

  private:
    int m_ = 0, n_ = 0, components_ = 0;
    std::vector<Crossing> crossings_;
    std::vector<int> entry_arcs_;
};

Diagram build_thk(int m, int n);

// gcd(m,n); cross-checked against the component walk of the built diagram
int component_count(int m, int n);

// Fox coloring relations, one row per crossing: +2 over, -1 each under arc
// (summed on coincidence).  N x N with N = crossing count.
IntMatrix coloring_matrix(const Diagram& d);

// {"m":..,"n":..,"crossings":[[over,under_in,under_out],..]}
std::string diagram_json(const Diagram& d);

}  // namespace thk
