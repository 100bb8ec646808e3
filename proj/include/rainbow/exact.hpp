#pragma once

#include <cstdint>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Outcome of the branch-and-bound search. Exactly one of these holds:
///   found            — a rainbow matching of size >= k was found (in `best`);
///   exhausted        — the whole space was searched, no such matching exists;
///   budget_exceeded  — the node budget ran out first.
/// `best` always carries the largest rainbow matching seen, `nodes` the
/// number of search nodes visited.
struct ExactResult {
    bool found = false;
    bool exhausted = false;
    bool budget_exceeded = false;
    Matching best;
    std::uint64_t nodes = 0;
};

/// Decision search: branch on edges in sorted order (take, then skip),
/// pruning branches whose free vertices or unused colors on disjoint edges
/// cannot reach k. Deterministic. The budget counts search nodes, not time.
ExactResult exact_find(const EdgeColoredGraph& g, int k, std::uint64_t budget);

struct ExactMaxResult {
    int r = 0;                     // largest size proven (or best found on budget exhaustion)
    Matching best;
    bool budget_exceeded = false;  // true => r is only a lower bound
    std::uint64_t nodes = 0;
};

/// Maximum rainbow matching size, by running exact_find with increasing k
/// until a size is refuted. The budget is shared across the whole run.
ExactMaxResult exact_max(const EdgeColoredGraph& g, std::uint64_t budget);

}  // namespace rainbow
