#include "rainbow/reduce.hpp"

#include <map>
#include <vector>

namespace rainbow {

const char* to_string(DeletionRule rule) {
    return rule == DeletionRule::RepeatBothEnds ? "repeat-both-ends" : "degree-slack";
}

namespace {

// Live view of the shrinking graph: per-vertex color multiplicities and the
// resulting color degrees, updated per deletion.
struct LiveState {
    std::vector<std::map<long long, int>> mult;  // vertex -> color -> edge count
    std::vector<int> color_degree;
    std::vector<bool> alive;

    explicit LiveState(const EdgeColoredGraph& g)
        : mult(static_cast<size_t>(g.vertex_count())),
          color_degree(static_cast<size_t>(g.vertex_count()), 0),
          alive(static_cast<size_t>(g.edge_count()), true) {
        for (const ColoredEdge& e : g.edges()) {
            for (int x : {e.u, e.v}) {
                auto& mm = mult[static_cast<size_t>(x)];
                if (++mm[e.color] == 1) ++color_degree[static_cast<size_t>(x)];
            }
        }
    }

    int multiplicity(int v, long long c) const {
        const auto& mm = mult[static_cast<size_t>(v)];
        auto it = mm.find(c);
        return it == mm.end() ? 0 : it->second;
    }

    void remove(const ColoredEdge& e) {
        for (int x : {e.u, e.v}) {
            auto& mm = mult[static_cast<size_t>(x)];
            if (--mm[e.color] == 0) {
                mm.erase(e.color);
                --color_degree[static_cast<size_t>(x)];
            }
        }
    }
};

}  // namespace

ReduceResult reduce_to_critical(const EdgeColoredGraph& g, int k) {
    LiveState st(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (st.color_degree[static_cast<size_t>(v)] < k)
            throw std::invalid_argument("min color degree below k=" + std::to_string(k) +
                                        " at vertex " + std::to_string(v));

    ReduceResult res;
    bool changed = true;
    while (changed) {
        changed = false;
        // Color repeated at both endpoints: removal changes no color degree.
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            if (!st.alive[static_cast<size_t>(eid)]) continue;
            const ColoredEdge& e = g.edge(eid);
            if (st.multiplicity(e.u, e.color) >= 2 && st.multiplicity(e.v, e.color) >= 2) {
                st.alive[static_cast<size_t>(eid)] = false;
                st.remove(e);
                res.log.push_back({e, DeletionRule::RepeatBothEnds});
                changed = true;
            }
        }
        // Slack at both endpoints: each keeps color degree >= k after removal.
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            if (!st.alive[static_cast<size_t>(eid)]) continue;
            const ColoredEdge& e = g.edge(eid);
            auto slack = [&](int x) {
                return st.color_degree[static_cast<size_t>(x)] > k ||
                       st.multiplicity(x, e.color) >= 2;
            };
            if (slack(e.u) && slack(e.v)) {
                st.alive[static_cast<size_t>(eid)] = false;
                st.remove(e);
                res.log.push_back({e, DeletionRule::DegreeSlack});
                changed = true;
            }
        }
    }

    std::vector<ColoredEdge> kept;
    for (int eid = 0; eid < g.edge_count(); ++eid)
        if (st.alive[static_cast<size_t>(eid)]) kept.push_back(g.edge(eid));
    res.graph = EdgeColoredGraph(g.vertex_count(), std::move(kept));
    return res;
}

}  // namespace rainbow
