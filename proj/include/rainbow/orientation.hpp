#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/stars.hpp"

namespace rainbow {

/// A direction for every edge. Star edges always point away from their
/// center; single-edge color classes (e0) point wherever the local search
/// left them.
struct Orientation {
    std::vector<bool> src_is_u;     // per edge id: tail is edge.u
    std::vector<int> color_outdeg;  // distinct colors on out-edges, per vertex
    std::vector<int> indeg;         // number of in-edges, per vertex
    std::vector<int> sequence;      // color_outdeg values, sorted descending

    int tail(const EdgeColoredGraph& g, int eid) const {
        const ColoredEdge& e = g.edge(eid);
        return src_is_u[static_cast<size_t>(eid)] ? e.u : e.v;
    }
    int head(const EdgeColoredGraph& g, int eid) const {
        const ColoredEdge& e = g.edge(eid);
        return src_is_u[static_cast<size_t>(eid)] ? e.v : e.u;
    }
};

/// One local-search move on e0 edge directions:
///   kind 1: reverse the single e0 edge e1.
///   kind 2: reverse every e0 in-edge of `vertex`.
///   kind 3: reverse the pair of e0 in-edges e1, e2 of `vertex`.
struct OrientationMove {
    int kind = 0;
    int vertex = -1;
    int e1 = -1;
    int e2 = -1;
};

/// Directs star edges center -> leaf, seeds initial e0 directions from the
/// given RNG seed, then runs a first-improving-move local search (vertex
/// moves ascending, then edge moves ascending) maximizing the descending
/// color-outdegree sequence lexicographically. e0 edges whose flip leaves
/// the sequence exactly equal are canonicalized to point from the lower
/// vertex id. Deterministic for a fixed seed; the seed only picks the
/// initial e0 directions. Throws std::invalid_argument if the decomposition
/// has violations.
Orientation orient(const EdgeColoredGraph& g, const StarDecomposition& d, std::uint64_t seed);

/// First move that would lexicographically increase the outdegree sequence,
/// or nullopt if the orientation is stable. Exposed for invariant checks.
std::optional<OrientationMove> find_improving_move(const EdgeColoredGraph& g,
                                                   const StarDecomposition& d,
                                                   const Orientation& o);

}  // namespace rainbow
