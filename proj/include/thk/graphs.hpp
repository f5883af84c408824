#pragma once
#include <string>
#include <utility>
#include <vector>

#include "thk/bigint.hpp"
#include "thk/braid.hpp"

namespace thk {

// Checkerboard (Tait) graph: multigraph, parallel edges kept.
struct CheckerboardGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// Both shadings of the 2-face-coloring; .first is the shading containing the
// bottom face (the face at the south corner of crossing 0, i.e. the
// leftmost-bottom region).  One edge per crossing in each shading.
std::pair<CheckerboardGraph, CheckerboardGraph> checkerboard_shadings(const Diagram& d);

// The shading with fewer vertices; ties go to the bottom-face shading.
CheckerboardGraph build_checkerboard(const Diagram& d);

// Matrix-Tree: det of the Laplacian with last row/column deleted (Bareiss).
BigInt spanning_tree_count(const CheckerboardGraph& g);

// deletion-contraction oracle; refuses graphs with more than 20 edges
BigInt spanning_trees_bruteforce(const CheckerboardGraph& g);

// hub joined to every vertex of an n-cycle
CheckerboardGraph build_wheel(int n);

// cycle of n vertices times a path of m/2 vertices (box product); its
// spanning-tree count equals the THK(m,n) determinant for even m
CheckerboardGraph build_tensor(int m, int n);

// exact isomorphism by permutation search; vertex_count <= 10
bool graphs_isomorphic(const CheckerboardGraph& a, const CheckerboardGraph& b);

std::string graph_json(const CheckerboardGraph& g);

}  // namespace thk
