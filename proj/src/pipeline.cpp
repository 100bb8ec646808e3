#include "rainbow/pipeline.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

std::string mass_note(const CaseLabel& label) {
    return "mass=" + to_string(label.mass) + " |C|=" + std::to_string(label.c_size) +
           " |L|=" + std::to_string(label.l_size);
}

}  // namespace

SolveResult pipeline_solve(const EdgeColoredGraph& g, int k, std::uint64_t budget,
                           std::uint64_t seed, PipelineArtifacts* artifacts) {
    SolveResult res;
    res.target = k;
    res.trace.algorithm = "pipeline";
    if (k <= 0) {
        res.succeeded = true;
        res.trace.stages.push_back("trivial: target is zero");
        return res;
    }

    ColorDegreeProfile prof = color_degree_profile(g);
    if (prof.min_color_degree < k)
        throw std::invalid_argument("minimum color degree " +
                                    std::to_string(prof.min_color_degree) +
                                    " is below the target " + std::to_string(k));

    PipelineArtifacts local;
    PipelineArtifacts& art = artifacts ? *artifacts : local;

    art.reduction = reduce_to_critical(g, k);
    const EdgeColoredGraph& r = art.reduction.graph;
    res.trace.stages.push_back("reduce: removed " + std::to_string(art.reduction.log.size()) +
                               " edges, " + std::to_string(r.edge_count()) + " remain");

    art.decomposition = star_decomposition(r);
    res.trace.stages.push_back("decompose: " + std::to_string(art.decomposition.stars.size()) +
                               " stars, " + std::to_string(art.decomposition.e0.size()) +
                               " single edges");

    art.orientation = orient(r, art.decomposition, seed);
    size_t with_out = 0;
    for (int x : art.orientation.sequence)
        if (x > 0) ++with_out;
    res.trace.stages.push_back("orient: seed " + std::to_string(seed) + ", " +
                               std::to_string(with_out) + " vertices with out-edges");

    art.partition = partition_vertices(r, art.decomposition, art.orientation);
    art.label = classify_case(art.partition, r.vertex_count(), k);
    res.trace.case_label = to_string(art.label.kind);
    res.trace.stages.push_back("classify: " + std::string(to_string(art.label.kind)) + " (" +
                               mass_note(art.label) + ")");

    // Try the classified case first, then the other two in cyclic order.
    std::vector<CaseKind> order;
    switch (art.label.kind) {
        case CaseKind::Case2:
            order = {CaseKind::Case2, CaseKind::Case3, CaseKind::Case1};
            break;
        case CaseKind::Case3:
            order = {CaseKind::Case3, CaseKind::Case1, CaseKind::Case2};
            break;
        default:
            order = {CaseKind::Case1, CaseKind::Case2, CaseKind::Case3};
            break;
    }

    for (CaseKind kind : order) {
        SolveResult attempt;
        if (kind == CaseKind::Case1) {
            if (!art.w1) art.w1 = compute_w1(r, art.partition);
            attempt = case1_solve(r, art.partition, *art.w1, k);
        } else if (kind == CaseKind::Case2) {
            if (!art.w2) art.w2 = compute_w2(r, art.decomposition, art.orientation);
            attempt = case2_solve(r, art.decomposition, art.orientation, *art.w2, k);
        } else {
            if (!art.w3) art.w3 = compute_w3(art.partition);
            attempt = case3_solve(r, art.partition, *art.w3, k);
        }
        art.attempts.push_back(attempt);

        std::string name = attempt.trace.algorithm;
        if (attempt.succeeded) {
            MatchingCheck check = check_rainbow_matching(g, attempt.matching.edges);
            if (check.ok && attempt.matching.size() >= k) {
                res.trace.stages.push_back(name + ": found a matching of size " +
                                           std::to_string(attempt.matching.size()));
                res.matching = attempt.matching;
                res.succeeded = true;
                res.trace.case1_steps = attempt.trace.case1_steps;
                res.trace.case2_steps = attempt.trace.case2_steps;
                res.trace.case3 = attempt.trace.case3;
                return res;
            }
            res.trace.stages.push_back(name + ": rejected (" + check.violation + ")");
        } else {
            res.trace.stages.push_back(name + ": failed (" + attempt.trace.failure_reason + ")");
        }
    }

    // Constructive attempts exhausted; search the original graph directly.
    res.trace.fallback_used = true;
    res.trace.stages.push_back("fallback: exact search, budget " + std::to_string(budget));
    ExactResult ex = exact_find(g, k, budget);
    res.nodes = ex.nodes;
    res.budget_exceeded = ex.budget_exceeded;
    if (ex.found && is_rainbow_matching(g, ex.best) && ex.best.size() >= k) {
        res.matching = ex.best;
        res.succeeded = true;
        return res;
    }
    res.matching = ex.best;
    res.trace.failure_reason = ex.budget_exceeded
                                   ? "exact search budget exhausted"
                                   : "no rainbow matching of the target size exists";
    return res;
}

}  // namespace rainbow
