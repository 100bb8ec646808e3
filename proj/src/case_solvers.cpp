#include "rainbow/case_solvers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rainbow {

namespace {

void sort_matching(Matching& m) {
    std::sort(m.edges.begin(), m.edges.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
}

// Connected components of the alive edges of one color, each a sorted edge-id
// list; components ordered by their smallest edge id.
std::vector<std::vector<int>> color_components(const EdgeColoredGraph& g,
                                               const std::vector<bool>& alive, long long color) {
    std::vector<int> eids;
    for (int eid = 0; eid < g.edge_count(); ++eid)
        if (alive[static_cast<size_t>(eid)] && g.edge(eid).color == color) eids.push_back(eid);
    std::map<int, std::vector<int>> at_vertex;
    for (int eid : eids) {
        at_vertex[g.edge(eid).u].push_back(eid);
        at_vertex[g.edge(eid).v].push_back(eid);
    }
    std::set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int start : eids) {
        if (seen.count(start)) continue;
        std::vector<int> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int eid = stack.back();
            stack.pop_back();
            comp.push_back(eid);
            for (int x : {g.edge(eid).u, g.edge(eid).v})
                for (int other : at_vertex[x])
                    if (seen.insert(other).second) stack.push_back(other);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool vertex_free(const Matching& m, int v) {
    for (const ColoredEdge& e : m.edges)
        if (e.u == v || e.v == v) return false;
    return true;
}

bool color_free(const Matching& m, long long c) {
    for (const ColoredEdge& e : m.edges)
        if (e.color == c) return false;
    return true;
}

}  // namespace

SolveResult case1_solve(const EdgeColoredGraph& g, const VertexPartition& p, const W1Map& w1,
                        int k) {
    SolveResult res;
    res.target = k;
    res.trace.algorithm = "case1";

    // Work on the positive-weight subgraph with live vertex weights.
    std::vector<bool> alive(static_cast<size_t>(g.edge_count()), false);
    std::vector<Rat> vweight(static_cast<size_t>(g.vertex_count()), Rat(0));
    int alive_count = 0;
    for (int eid = 0; eid < g.edge_count(); ++eid) {
        if (w1.edge[static_cast<size_t>(eid)] > Rat(0)) {
            alive[static_cast<size_t>(eid)] = true;
            ++alive_count;
            const ColoredEdge& e = g.edge(eid);
            vweight[static_cast<size_t>(e.u)] += w1.edge[static_cast<size_t>(eid)];
            vweight[static_cast<size_t>(e.v)] += w1.edge[static_cast<size_t>(eid)];
        }
    }

    std::vector<std::vector<bool>> snapshots;  // alive set at the start of each step
    auto remove_edge = [&](int eid, Rat& removed) {
        alive[static_cast<size_t>(eid)] = false;
        --alive_count;
        const ColoredEdge& e = g.edge(eid);
        const Rat& val = w1.edge[static_cast<size_t>(eid)];
        vweight[static_cast<size_t>(e.u)] -= val;
        vweight[static_cast<size_t>(e.v)] -= val;
        removed += val;
    };
    auto remove_vertex = [&](int v, Rat& removed) {
        for (int eid : g.incident(v))
            if (alive[static_cast<size_t>(eid)]) remove_edge(eid, removed);
    };
    auto remove_color = [&](long long c, Rat& removed) {
        for (int eid = 0; eid < g.edge_count(); ++eid)
            if (alive[static_cast<size_t>(eid)] && g.edge(eid).color == c) remove_edge(eid, removed);
    };
    auto class_weight = [&](long long c) {
        Rat sum(0);
        for (int eid = 0; eid < g.edge_count(); ++eid)
            if (alive[static_cast<size_t>(eid)] && g.edge(eid).color == c)
                sum += w1.edge[static_cast<size_t>(eid)];
        return sum;
    };

    for (int i = 1; alive_count > 0 && i - 1 < k; ++i) {
        snapshots.push_back(alive);
        Rat threshold = rat(2LL * (k - i));
        Case1Step step;
        step.index = i;

        int heavy = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (heavy < 0 || vweight[static_cast<size_t>(v)] > vweight[static_cast<size_t>(heavy)])
                heavy = v;

        std::set<long long> alive_colors;
        for (int eid = 0; eid < g.edge_count(); ++eid)
            if (alive[static_cast<size_t>(eid)]) alive_colors.insert(g.edge(eid).color);
        long long crowded_color = -1;
        int crowded_count = 0;
        for (long long c : alive_colors) {
            int count = static_cast<int>(color_components(g, alive, c).size());
            if (count > crowded_count) {
                crowded_count = count;
                crowded_color = c;
            }
        }

        Rat removed(0);
        if (heavy >= 0 && vweight[static_cast<size_t>(heavy)] > threshold) {
            step.option = 1;
            step.removed_vertex = heavy;
            remove_vertex(heavy, removed);
        } else if (crowded_color >= 0 && crowded_count >= 2 * (k - i) + 1) {
            step.option = 2;
            step.removed_color = crowded_color;
            step.class_components = crowded_count;
            remove_color(crowded_color, removed);
        } else {
            // Both endpoints and the whole color class of one edge go; take
            // the edge about to erase the most weight.
            int pick = -1;
            Rat pick_score(0);
            for (int eid = 0; eid < g.edge_count(); ++eid) {
                if (!alive[static_cast<size_t>(eid)]) continue;
                const ColoredEdge& e = g.edge(eid);
                Rat score = vweight[static_cast<size_t>(e.u)] + vweight[static_cast<size_t>(e.v)] +
                            class_weight(e.color);
                if (pick < 0 || score > pick_score) {
                    pick = eid;
                    pick_score = score;
                }
            }
            const ColoredEdge& e = g.edge(pick);
            step.option = 3;
            step.removed_color = e.color;
            bool u_in_c = p.in_c[static_cast<size_t>(e.u)];
            step.edge_x = u_in_c ? e.u : e.v;  // C side
            step.edge_y = u_in_c ? e.v : e.u;  // L side
            remove_vertex(e.u, removed);
            remove_vertex(e.v, removed);
            remove_color(e.color, removed);
        }
        step.step_weight = removed;
        res.trace.case1_steps.push_back(step);
    }

    // Unwind: each step contributes one edge, chosen fresh against the
    // matching built from the later steps.
    Matching m;
    for (int i = static_cast<int>(res.trace.case1_steps.size()); i >= 1; --i) {
        Case1Step& step = res.trace.case1_steps[static_cast<size_t>(i - 1)];
        const std::vector<bool>& live = snapshots[static_cast<size_t>(i - 1)];
        int picked = -1;
        if (step.option == 1) {
            for (int eid : g.incident(step.removed_vertex)) {
                if (!live[static_cast<size_t>(eid)]) continue;
                const ColoredEdge& e = g.edge(eid);
                int other = e.u == step.removed_vertex ? e.v : e.u;
                if (vertex_free(m, other) && color_free(m, e.color)) {
                    picked = eid;
                    break;
                }
            }
        } else if (step.option == 2) {
            for (const std::vector<int>& comp :
                 color_components(g, live, step.removed_color)) {
                bool untouched = true;
                for (int eid : comp) {
                    const ColoredEdge& e = g.edge(eid);
                    if (!vertex_free(m, e.u) || !vertex_free(m, e.v)) untouched = false;
                }
                if (untouched) {
                    picked = comp[0];
                    break;
                }
            }
        } else {
            int eid = g.find_edge(step.edge_x, step.edge_y);
            const ColoredEdge& e = g.edge(eid);
            if (vertex_free(m, e.u) && vertex_free(m, e.v) && color_free(m, e.color)) picked = eid;
        }
        if (picked < 0) {
            res.trace.failure_reason =
                "reconstruction stuck at step " + std::to_string(i);
            break;
        }
        step.reconstructed = g.edge(picked);
        m.edges.push_back(g.edge(picked));
    }

    sort_matching(m);
    res.matching = m;
    res.succeeded = m.size() >= k;
    if (!res.succeeded && res.trace.failure_reason.empty())
        res.trace.failure_reason = "peeling ended after " +
                                   std::to_string(res.trace.case1_steps.size()) + " of " +
                                   std::to_string(k) + " steps";
    return res;
}

SolveResult case2_solve(const EdgeColoredGraph& g, const StarDecomposition& d,
                        const Orientation& o, const W2Map& w2, int k) {
    (void)d;
    (void)o;
    SolveResult res;
    res.target = k;
    res.trace.algorithm = "case2";

    std::vector<bool> alive(static_cast<size_t>(g.edge_count()), true);
    std::map<long long, Rat> class_weight;
    for (int eid = 0; eid < g.edge_count(); ++eid)
        class_weight[g.edge(eid).color] += w2.edge[static_cast<size_t>(eid)];

    Matching m;
    for (int i = 1; i <= k; ++i) {
        long long pick_color = -1;
        for (const auto& [c, wt] : class_weight)
            if (wt > Rat(0) && (pick_color < 0 || wt < class_weight[pick_color])) pick_color = c;
        if (pick_color < 0) {
            res.trace.failure_reason = "ran out of colors after " + std::to_string(i - 1) +
                                       " of " + std::to_string(k) + " steps";
            break;
        }

        auto comps = color_components(g, alive, pick_color);
        size_t largest = 0;
        for (size_t ci = 1; ci < comps.size(); ++ci)
            if (comps[ci].size() > comps[largest].size()) largest = ci;
        int chosen = comps[largest][0];
        const ColoredEdge& e = g.edge(chosen);

        Case2Step step;
        step.index = i;
        step.color = pick_color;
        step.class_weight_at_deletion = class_weight[pick_color];
        step.chosen = e;

        // Delete everything incident to the chosen edge or sharing its color,
        // tracking how much each other class loses.
        std::map<long long, Rat> drop;
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            if (!alive[static_cast<size_t>(eid)]) continue;
            const ColoredEdge& f = g.edge(eid);
            bool incident = f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
            if (!incident && f.color != pick_color) continue;
            alive[static_cast<size_t>(eid)] = false;
            class_weight[f.color] -= w2.edge[static_cast<size_t>(eid)];
            if (f.color != pick_color) drop[f.color] += w2.edge[static_cast<size_t>(eid)];
        }
        step.max_drop_other = Rat(0);
        for (const auto& [c, v] : drop) step.max_drop_other = std::max(step.max_drop_other, v);

        res.trace.case2_steps.push_back(step);
        m.edges.push_back(e);
    }

    sort_matching(m);
    res.matching = m;
    res.succeeded = m.size() >= k;
    return res;
}

SolveResult case3_solve(const EdgeColoredGraph& g, const VertexPartition& p, const W3Map& w3,
                        int k) {
    SolveResult res;
    res.target = k;
    res.trace.algorithm = "case3";
    if (k <= 0) {
        res.succeeded = true;
        return res;
    }

    int witness = -1;
    for (int v : p.l_vertices)
        if (witness < 0 || w3.vertex[static_cast<size_t>(v)] < w3.vertex[static_cast<size_t>(witness)])
            witness = v;
    if (witness < 0 || w3.vertex[static_cast<size_t>(witness)] >= Rat(1)) {
        res.trace.failure_reason = "no witness: min vertex weight >= 1";
        return res;
    }

    // The witness's incident maximal stars, fewest L-vertices first.
    std::vector<int> stars;
    for (size_t si = 0; si < p.stars.size(); ++si) {
        for (int eid : p.stars[si].edge_ids) {
            const ColoredEdge& e = g.edge(eid);
            if (e.u == witness || e.v == witness) {
                stars.push_back(static_cast<int>(si));
                break;
            }
        }
    }
    std::sort(stars.begin(), stars.end(), [&](int a, int b) {
        size_t la = p.stars[static_cast<size_t>(a)].l_vertices.size();
        size_t lb = p.stars[static_cast<size_t>(b)].l_vertices.size();
        return la != lb ? la < lb : p.stars[static_cast<size_t>(a)].color <
                                        p.stars[static_cast<size_t>(b)].color;
    });
    if (static_cast<int>(stars.size()) < k) {
        res.trace.failure_reason = "witness has " + std::to_string(stars.size()) +
                                   " incident stars, needs " + std::to_string(k);
        return res;
    }
    stars.resize(static_cast<size_t>(k));

    Case3Trace t;
    t.vertex = witness;
    t.witness_weight = w3.vertex[static_cast<size_t>(witness)];
    std::set<long long> colors;
    std::set<int> centers;
    for (int si : stars) {
        const MaxStar& s = p.stars[static_cast<size_t>(si)];
        t.star_colors.push_back(s.color);
        t.star_centers.push_back(s.center);
        t.l_counts.push_back(static_cast<int>(s.l_vertices.size()));
        colors.insert(s.color);
        centers.insert(s.center);
    }
    res.trace.case3 = t;
    if (colors.size() != stars.size() || centers.size() != stars.size()) {
        res.trace.failure_reason = "witness stars repeat a center or color";
        return res;
    }
    for (int l = 2; l <= k; ++l) {
        if (t.l_counts[static_cast<size_t>(l - 1)] <= l) {
            res.trace.failure_reason = "star " + std::to_string(l) + " has only " +
                                       std::to_string(t.l_counts[static_cast<size_t>(l - 1)]) +
                                       " L-vertices";
            return res;
        }
    }

    // Start with the witness's own edge, then take one fresh L-vertex from
    // each later star.
    Matching m;
    const MaxStar& first = p.stars[static_cast<size_t>(stars[0])];
    for (int eid : first.edge_ids) {
        const ColoredEdge& e = g.edge(eid);
        if (e.u == witness || e.v == witness) {
            m.edges.push_back(e);
            break;
        }
    }
    for (int l = 2; l <= k; ++l) {
        const MaxStar& s = p.stars[static_cast<size_t>(stars[static_cast<size_t>(l - 1)])];
        if (!vertex_free(m, s.center)) {
            res.trace.failure_reason = "center of star " + std::to_string(l) + " already used";
            break;
        }
        int chosen = -1;
        for (int x : s.l_vertices) {
            if (x == s.center || !vertex_free(m, x)) continue;
            chosen = g.find_edge(s.center, x);
            if (chosen >= 0) break;
        }
        if (chosen < 0) {
            res.trace.failure_reason = "no free L-vertex in star " + std::to_string(l);
            break;
        }
        m.edges.push_back(g.edge(chosen));
    }

    sort_matching(m);
    res.trace.case3->chosen = m.edges;
    res.matching = m;
    res.succeeded = m.size() >= k;
    return res;
}

SolveResult greedy_baseline(const EdgeColoredGraph& g, int k) {
    SolveResult res;
    res.target = k;
    res.trace.algorithm = "greedy";

    Matching m;
    while (m.size() < k) {
        // Candidates: free endpoints, unused color. Degrees count candidates.
        std::vector<int> cand;
        std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            const ColoredEdge& e = g.edge(eid);
            if (vertex_free(m, e.u) && vertex_free(m, e.v) && color_free(m, e.color)) {
                cand.push_back(eid);
                ++deg[static_cast<size_t>(e.u)];
                ++deg[static_cast<size_t>(e.v)];
            }
        }
        if (cand.empty()) break;
        int pick = cand[0];
        int pick_deg = deg[static_cast<size_t>(g.edge(pick).u)] +
                       deg[static_cast<size_t>(g.edge(pick).v)];
        for (int eid : cand) {
            int d = deg[static_cast<size_t>(g.edge(eid).u)] + deg[static_cast<size_t>(g.edge(eid).v)];
            if (d < pick_deg) {
                pick = eid;
                pick_deg = d;
            }
        }
        m.edges.push_back(g.edge(pick));
    }

    sort_matching(m);
    res.matching = m;
    res.succeeded = m.size() >= k;
    if (!res.succeeded) res.trace.failure_reason = "greedy ran out of candidate edges";
    return res;
}

}  // namespace rainbow
