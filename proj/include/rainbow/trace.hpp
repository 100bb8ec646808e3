#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

/// One deletion step of the weighted peeling solver.
/// option 1: removed the vertex of maximum weight (weight > 2(k-i)).
/// option 2: removed the color class with the most components (>= 2(k-i)+1).
/// option 3: removed both endpoints of a chosen edge plus its whole color
/// class; `edge_x` is the C-endpoint and `edge_y` the L-endpoint.
struct Case1Step {
    int index = 0;    // i, 1-based
    int option = 0;   // 1, 2, or 3
    int removed_vertex = -1;
    long long removed_color = -1;
    int class_components = 0;  // option 2: component count at removal
    int edge_x = -1;
    int edge_y = -1;
    Rat step_weight;  // total weight removed by this step
    std::optional<ColoredEdge> reconstructed;  // edge added while unwinding
};

/// One greedy step of the min-class-weight solver.
struct Case2Step {
    int index = 0;  // 1-based
    long long color = -1;
    Rat class_weight_at_deletion;
    ColoredEdge chosen;
    Rat max_drop_other;  // largest weight loss of any other color this step
};

/// The witness-star construction of the large-L solver.
struct Case3Trace {
    int vertex = -1;
    Rat witness_weight;
    std::vector<long long> star_colors;  // sorted construction order
    std::vector<int> star_centers;
    std::vector<int> l_counts;           // |V(S) cap L| per star
    std::vector<ColoredEdge> chosen;
};

struct SolveTrace {
    std::string algorithm;
    std::vector<Case1Step> case1_steps;
    std::vector<Case2Step> case2_steps;
    std::optional<Case3Trace> case3;
    std::string case_label;            // pipeline: classification of the reduced graph
    std::vector<std::string> stages;   // pipeline: stage notes in execution order
    std::string failure_reason;        // empty on success
    bool fallback_used = false;
    int recursion_depth = 0;
};

struct SolveResult {
    Matching matching;
    SolveTrace trace;
    bool succeeded = false;
    bool budget_exceeded = false;
    std::uint64_t nodes = 0;  // search nodes, when an exact search ran
    int target = 0;           // the k that was asked for
};

nlohmann::json rat_json(const Rat& r);
nlohmann::json matching_json(const Matching& m);
nlohmann::json trace_json(const SolveTrace& t);

/// The stable result schema: {algorithm, k, size, succeeded, matching, trace,
/// stats:{nodes, steps, depth}}.
nlohmann::json solve_result_json(const SolveResult& r);

}  // namespace rainbow
