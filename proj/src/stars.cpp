#include "rainbow/stars.hpp"

#include <algorithm>
#include <map>

namespace rainbow {

StarDecomposition star_decomposition(const EdgeColoredGraph& g) {
    StarDecomposition d;
    int m = g.edge_count();
    d.star_of_edge.assign(static_cast<size_t>(m), -1);
    d.edge_kind.assign(static_cast<size_t>(m), StarDecomposition::InE0);

    std::map<long long, std::vector<int>> by_color;
    for (int eid = 0; eid < m; ++eid) by_color[g.edge(eid).color].push_back(eid);

    for (auto& [color, eids] : by_color) {
        // Degrees within this color class.
        std::map<int, int> deg;
        for (int eid : eids) {
            ++deg[g.edge(eid).u];
            ++deg[g.edge(eid).v];
        }
        // An edge whose color repeats at both endpoints sits on a 3-edge path
        // or triangle of its class: flag it, keep the rest. What remains has
        // a degree-1 endpoint on every edge, hence splits into stars.
        std::vector<int> kept;
        for (int eid : eids) {
            const ColoredEdge& e = g.edge(eid);
            if (deg[e.u] >= 2 && deg[e.v] >= 2) {
                d.violations.push_back(eid);
                d.edge_kind[static_cast<size_t>(eid)] = StarDecomposition::InViolations;
            } else {
                kept.push_back(eid);
            }
        }
        // Group kept edges by shared vertices (components of the residue).
        std::map<int, std::vector<int>> at_vertex;
        for (int eid : kept) {
            at_vertex[g.edge(eid).u].push_back(eid);
            at_vertex[g.edge(eid).v].push_back(eid);
        }
        std::vector<bool> seen(kept.size(), false);
        std::map<int, size_t> kept_pos;
        for (size_t i = 0; i < kept.size(); ++i) kept_pos[kept[i]] = i;
        for (size_t i = 0; i < kept.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> comp;
            std::vector<int> stack{kept[i]};
            seen[i] = true;
            while (!stack.empty()) {
                int eid = stack.back();
                stack.pop_back();
                comp.push_back(eid);
                for (int x : {g.edge(eid).u, g.edge(eid).v}) {
                    for (int other : at_vertex[x]) {
                        size_t pos = kept_pos[other];
                        if (!seen[pos]) {
                            seen[pos] = true;
                            stack.push_back(other);
                        }
                    }
                }
            }
            if (comp.size() == 1) {
                d.e0.push_back(comp[0]);
                continue;
            }
            std::sort(comp.begin(), comp.end());
            // The component is a star; the center is on every edge.
            const ColoredEdge& first = g.edge(comp[0]);
            const ColoredEdge& second = g.edge(comp[1]);
            int center = (first.u == second.u || first.u == second.v) ? first.u : first.v;
            Star s;
            s.color = color;
            s.center = center;
            s.edge_ids = comp;
            for (int eid : comp) {
                const ColoredEdge& e = g.edge(eid);
                if (e.u != center && e.v != center)
                    throw std::logic_error("color class residue is not a star");
                s.leaves.push_back(e.u == center ? e.v : e.u);
            }
            std::sort(s.leaves.begin(), s.leaves.end());
            d.stars.push_back(std::move(s));
        }
    }

    std::sort(d.stars.begin(), d.stars.end(), [](const Star& a, const Star& b) {
        return a.color != b.color ? a.color < b.color : a.center < b.center;
    });
    for (size_t i = 0; i < d.stars.size(); ++i) {
        for (int eid : d.stars[i].edge_ids) {
            d.star_of_edge[static_cast<size_t>(eid)] = static_cast<int>(i);
            d.edge_kind[static_cast<size_t>(eid)] = StarDecomposition::InStar;
        }
    }
    std::sort(d.e0.begin(), d.e0.end());
    std::sort(d.violations.begin(), d.violations.end());
    return d;
}

}  // namespace rainbow
