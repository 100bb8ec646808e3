#pragma once

#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/orientation.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/stars.hpp"

namespace rainbow {

/// A maximal monochromatic star, size >= 1, with its vertices classified
/// against the C/L split. For single-edge classes the center is the tail.
struct MaxStar {
    long long color = -1;
    int center = -1;
    std::vector<int> edge_ids;
    std::vector<int> l_vertices;  // members of V(S) in L, ascending
};

/// C = vertices with at least one out-edge, L = the rest. `stars` lists every
/// maximal monochromatic star; `s_star` indexes those with >= 2 vertices in L,
/// `e0_star` those with exactly one. case1_mass = |s_star| + |e0_star|/2.
struct VertexPartition {
    int n = 0;
    std::vector<bool> in_c;
    std::vector<int> c_vertices;
    std::vector<int> l_vertices;
    std::vector<MaxStar> stars;
    std::vector<int> s_star;
    std::vector<int> e0_star;
    Rat case1_mass;
};

VertexPartition partition_vertices(const EdgeColoredGraph& g, const StarDecomposition& d,
                                   const Orientation& o);

enum class CaseKind { Case1, Case2, Case3, NoCase };

const char* to_string(CaseKind kind);

/// The classification plus the exact quantities it compared.
struct CaseLabel {
    CaseKind kind = CaseKind::NoCase;
    Rat mass;             // |s_star| + |e0_star|/2
    long long c_size = 0;
    long long l_size = 0;
    Rat case1_threshold;  // 5 k^2 / 2
    Rat case2_threshold;  // 7 k^2 / 4
};

/// Case1 iff mass >= 5k^2/2 (inclusive); else Case2 iff |C| >= 7k^2/4; else
/// Case3 iff |L| > mass; else NoCase. All comparisons exact. NoCase is
/// returned, never thrown; it cannot occur when n > 4.25 k^2.
CaseLabel classify_case(const VertexPartition& p, int n, int k);

}  // namespace rainbow
