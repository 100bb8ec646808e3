#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Why an edge was removed during reduction.
///   RepeatBothEnds: its color appears on another edge at each endpoint, so
///                   removal changes no color degree.
///   DegreeSlack:    at each endpoint the color degree stays >= k after
///                   removal (degree above k, or the color repeats there).
enum class DeletionRule { RepeatBothEnds, DegreeSlack };

const char* to_string(DeletionRule rule);

struct Deletion {
    ColoredEdge edge;
    DeletionRule rule;
};

struct ReduceResult {
    EdgeColoredGraph graph;       // same vertex count, surviving edges
    std::vector<Deletion> log;    // in deletion order
};

/// Deletes edges until no rule applies, sweeping edges in ascending order and
/// re-deriving color degrees incrementally (RepeatBothEnds before DegreeSlack
/// in each pass). The result keeps min color degree >= k, every color class
/// is a star forest, and every surviving edge has an endpoint with color
/// degree exactly k where its color appears only once.
/// Throws std::invalid_argument if g has min color degree < k.
ReduceResult reduce_to_critical(const EdgeColoredGraph& g, int k);

}  // namespace rainbow
