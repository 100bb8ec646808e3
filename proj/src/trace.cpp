#include "rainbow/trace.hpp"

namespace rainbow {

nlohmann::json rat_json(const Rat& r) {
    return nlohmann::json::array({r.numerator().str(), r.denominator().str()});
}

nlohmann::json matching_json(const Matching& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ColoredEdge& e : m.edges) arr.push_back({e.u, e.v, e.color});
    return arr;
}

namespace {

nlohmann::json edge_json(const ColoredEdge& e) {
    return nlohmann::json::array({e.u, e.v, e.color});
}

nlohmann::json case1_step_json(const Case1Step& s) {
    nlohmann::json j{{"i", s.index}, {"option", s.option}, {"weight", rat_json(s.step_weight)}};
    if (s.option == 1) j["vertex"] = s.removed_vertex;
    if (s.option == 2) {
        j["color"] = s.removed_color;
        j["components"] = s.class_components;
    }
    if (s.option == 3) {
        j["edge"] = nlohmann::json::array({s.edge_x, s.edge_y});
        j["color"] = s.removed_color;
    }
    if (s.reconstructed) j["picked"] = edge_json(*s.reconstructed);
    return j;
}

nlohmann::json case2_step_json(const Case2Step& s) {
    return {{"i", s.index},
            {"color", s.color},
            {"class_weight", rat_json(s.class_weight_at_deletion)},
            {"edge", edge_json(s.chosen)},
            {"max_drop_other", rat_json(s.max_drop_other)}};
}

nlohmann::json case3_json(const Case3Trace& t) {
    nlohmann::json stars = nlohmann::json::array();
    for (size_t i = 0; i < t.star_colors.size(); ++i)
        stars.push_back({{"color", t.star_colors[i]},
                         {"center", t.star_centers[i]},
                         {"l_count", t.l_counts[i]}});
    nlohmann::json chosen = nlohmann::json::array();
    for (const ColoredEdge& e : t.chosen) chosen.push_back(edge_json(e));
    return {{"witness", t.vertex},
            {"witness_weight", rat_json(t.witness_weight)},
            {"stars", stars},
            {"chosen", chosen}};
}

}  // namespace

nlohmann::json trace_json(const SolveTrace& t) {
    nlohmann::json j{{"algorithm", t.algorithm}};
    if (!t.case_label.empty()) j["case"] = t.case_label;
    if (!t.stages.empty()) j["stages"] = t.stages;
    if (!t.case1_steps.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Case1Step& s : t.case1_steps) arr.push_back(case1_step_json(s));
        j["case1_steps"] = arr;
    }
    if (!t.case2_steps.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Case2Step& s : t.case2_steps) arr.push_back(case2_step_json(s));
        j["case2_steps"] = arr;
    }
    if (t.case3) j["case3"] = case3_json(*t.case3);
    if (!t.failure_reason.empty()) j["failure"] = t.failure_reason;
    j["fallback"] = t.fallback_used;
    return j;
}

nlohmann::json solve_result_json(const SolveResult& r) {
    return {{"algorithm", r.trace.algorithm},
            {"k", r.target},
            {"size", r.matching.size()},
            {"succeeded", r.succeeded},
            {"matching", matching_json(r.matching)},
            {"trace", trace_json(r.trace)},
            {"stats",
             {{"nodes", r.nodes},
              {"steps", r.trace.case1_steps.size() + r.trace.case2_steps.size()},
              {"depth", r.trace.recursion_depth}}}};
}

}  // namespace rainbow
