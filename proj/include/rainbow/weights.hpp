#pragma once

#include <map>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/orientation.hpp"
#include "rainbow/partition.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/stars.hpp"

namespace rainbow {

/// Edge weights for the large-mass case. A star with l >= 2 L-vertices puts
/// 1/l on each of its L-incident edges; a star with exactly one L-vertex puts
/// 1/2 on its single L-incident edge; everything else is 0. Every positive
/// edge has one endpoint in C and one in L, every weight is <= 1/2, and the
/// total equals case1_mass.
struct W1Map {
    std::vector<Rat> edge;    // per edge id
    std::vector<Rat> vertex;  // sum over incident edges
    Rat total;
};

W1Map compute_w1(const EdgeColoredGraph& g, const VertexPartition& p);

/// Edge weights for the large-C case, charged to tails: an e0 edge out of v
/// weighs 1/outdeg(v), a star edge out of v weighs 1/(outdeg(v) * star size),
/// where outdeg is the color outdegree. Out-weights sum to exactly 1 at every
/// vertex of C, so the total equals |C|.
struct W2Map {
    std::vector<Rat> edge;    // per edge id, all positive
    std::vector<Rat> wplus;   // per vertex: out-edge weight sum
    std::vector<Rat> wminus;  // per vertex: in-edge weight sum
    std::vector<Rat> vertex;  // wplus + wminus
    std::map<long long, Rat> color_total;
    Rat total;
};

W2Map compute_w2(const EdgeColoredGraph& g, const StarDecomposition& d, const Orientation& o);

/// Vertex weights on L for the large-L case: each star with l >= 2 L-vertices
/// gives 1/l to each of them, each star with exactly one gives 1/2 to it.
/// The total equals case1_mass.
struct W3Map {
    std::vector<Rat> vertex;  // per vertex, zero outside L
    Rat total;
};

W3Map compute_w3(const VertexPartition& p);

}  // namespace rainbow
