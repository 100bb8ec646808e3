#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/case_solvers.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/orientation.hpp"
#include "rainbow/partition.hpp"
#include "rainbow/reduce.hpp"
#include "rainbow/stars.hpp"
#include "rainbow/trace.hpp"
#include "rainbow/weights.hpp"

namespace rainbow {

/// Everything the pipeline computed along the way, for tracing and tests.
struct PipelineArtifacts {
    ReduceResult reduction;
    StarDecomposition decomposition;
    Orientation orientation;
    VertexPartition partition;
    CaseLabel label;
    std::optional<W1Map> w1;
    std::optional<W2Map> w2;
    std::optional<W3Map> w3;
    std::vector<SolveResult> attempts;  // case-solver attempts in order
};

/// The full constructive pipeline: reduce to a critical subgraph, decompose
/// color classes into stars, orient, partition, classify, then run the case
/// solvers starting with the classified case and retrying the others in
/// cyclic order. If all constructive attempts fail, falls back to exact_find
/// on the original graph within the node budget. The returned matching is
/// always re-verified against the original graph. Deterministic given
/// (g, k, seed, budget). Throws std::invalid_argument if min color degree < k.
SolveResult pipeline_solve(const EdgeColoredGraph& g, int k, std::uint64_t budget,
                           std::uint64_t seed = 0, PipelineArtifacts* artifacts = nullptr);

}  // namespace rainbow
