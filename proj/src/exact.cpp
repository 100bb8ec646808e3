#include "rainbow/exact.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace rainbow {

namespace {

struct Search {
    const EdgeColoredGraph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool found = false;
    std::vector<bool> vertex_used;
    std::set<long long> colors_used;
    std::vector<ColoredEdge> current;
    std::vector<ColoredEdge> best;

    Search(const EdgeColoredGraph& graph, int target, std::uint64_t node_budget)
        : g(graph), k(target), budget(node_budget),
          vertex_used(static_cast<size_t>(graph.vertex_count()), false) {}

    bool feasible(const ColoredEdge& e) const {
        return !vertex_used[static_cast<size_t>(e.u)] && !vertex_used[static_cast<size_t>(e.v)] &&
               colors_used.find(e.color) == colors_used.end();
    }

    // Optimistic bound on how many more edges could still join: fresh colors
    // among feasible remaining edges, capped by half the free vertices.
    int upper_bound(int from) const {
        std::set<long long> fresh;
        std::set<int> touched;
        for (int eid = from; eid < g.edge_count(); ++eid) {
            const ColoredEdge& e = g.edge(eid);
            if (!feasible(e)) continue;
            fresh.insert(e.color);
            touched.insert(e.u);
            touched.insert(e.v);
        }
        return std::min(static_cast<int>(fresh.size()), static_cast<int>(touched.size()) / 2);
    }

    void run(int from) {
        if (found || out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (static_cast<int>(current.size()) > static_cast<int>(best.size())) best = current;
        if (static_cast<int>(current.size()) >= k) {
            found = true;
            return;
        }
        if (from >= g.edge_count()) return;
        if (static_cast<int>(current.size()) + upper_bound(from) < k) return;

        const ColoredEdge& e = g.edge(from);
        if (feasible(e)) {
            vertex_used[static_cast<size_t>(e.u)] = vertex_used[static_cast<size_t>(e.v)] = true;
            colors_used.insert(e.color);
            current.push_back(e);
            run(from + 1);
            current.pop_back();
            colors_used.erase(e.color);
            vertex_used[static_cast<size_t>(e.u)] = vertex_used[static_cast<size_t>(e.v)] = false;
            if (found || out_of_budget) return;
        }
        run(from + 1);
    }
};

}  // namespace

ExactResult exact_find(const EdgeColoredGraph& g, int k, std::uint64_t budget) {
    ExactResult res;
    if (k <= 0) {
        res.found = true;
        res.nodes = 0;
        return res;
    }
    Search s(g, k, budget);
    s.run(0);
    res.found = s.found;
    res.budget_exceeded = s.out_of_budget;
    res.exhausted = !s.found && !s.out_of_budget;
    res.best.edges = s.best;
    res.nodes = s.nodes;
    return res;
}

ExactMaxResult exact_max(const EdgeColoredGraph& g, std::uint64_t budget) {
    ExactMaxResult res;
    while (true) {
        std::uint64_t left = budget > res.nodes ? budget - res.nodes : 0;
        ExactResult step = exact_find(g, res.r + 1, left);
        res.nodes += step.nodes;
        if (step.found) {
            res.r += 1;
            res.best = step.best;
            continue;
        }
        if (step.best.size() > res.best.size()) res.best = step.best;
        res.budget_exceeded = step.budget_exceeded;
        return res;
    }
}

}  // namespace rainbow
