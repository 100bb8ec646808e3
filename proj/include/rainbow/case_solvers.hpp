#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/orientation.hpp"
#include "rainbow/partition.hpp"
#include "rainbow/stars.hpp"
#include "rainbow/trace.hpp"
#include "rainbow/weights.hpp"

namespace rainbow {

/// Weighted peeling on the positive-w1 subgraph. Runs at most k deletion
/// steps (heavy vertex / many-component color class / edge plus endpoints
/// plus color class), then unwinds the steps backwards, extending a matching
/// by one fresh edge per step. Succeeds iff k steps ran and every extension
/// found an edge. Intended for partitions with case1_mass >= 5k^2/2.
SolveResult case1_solve(const EdgeColoredGraph& g, const VertexPartition& p, const W1Map& w1,
                        int k);

/// Greedy by class weight: repeatedly pick the positive color of minimum
/// total w2 (ties: smallest color id), take an edge from the largest
/// component of that class (ties: edge order), and delete everything
/// incident or same-colored. Succeeds iff k edges were taken. Intended for
/// partitions with |C| >= 7k^2/4.
SolveResult case2_solve(const EdgeColoredGraph& g, const StarDecomposition& d,
                        const Orientation& o, const W2Map& w2, int k);

/// Witness construction: pick v in L with w3(v) < 1 (failure if none), sort
/// its incident maximal stars by |V(S) cap L| ascending (ties: color id),
/// start with v's edge in the first star and extend from each later star's
/// center to an unused L-vertex. Intended for partitions with |L| > mass.
SolveResult case3_solve(const EdgeColoredGraph& g, const VertexPartition& p, const W3Map& w3,
                        int k);

/// Baseline: repeatedly take the edge with free endpoints and unused color
/// whose endpoints have minimum combined degree in the remaining graph
/// (ties: edge order).
SolveResult greedy_baseline(const EdgeColoredGraph& g, int k);

}  // namespace rainbow
