#include "rainbow/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace rainbow {

EdgeColoredGraph::EdgeColoredGraph(int n, std::vector<ColoredEdge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (ColoredEdge& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range for n=" +
                                        std::to_string(n));
        if (e.color < 0)
            throw std::invalid_argument("negative color on edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
    }
    std::sort(edges.begin(), edges.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + ")");
    edges_ = std::move(edges);
    incident_.assign(static_cast<size_t>(n_), {});
    for (size_t i = 0; i < edges_.size(); ++i) {
        incident_[static_cast<size_t>(edges_[i].u)].push_back(static_cast<int>(i));
        incident_[static_cast<size_t>(edges_[i].v)].push_back(static_cast<int>(i));
    }
}

std::vector<long long> EdgeColoredGraph::colors() const {
    std::set<long long> cs;
    for (const ColoredEdge& e : edges_) cs.insert(e.color);
    return {cs.begin(), cs.end()};
}

std::vector<long long> EdgeColoredGraph::colors_at(int v) const {
    std::set<long long> cs;
    for (int eid : incident(v)) cs.insert(edges_[static_cast<size_t>(eid)].color);
    return {cs.begin(), cs.end()};
}

int EdgeColoredGraph::color_multiplicity_at(int v, long long c) const {
    int count = 0;
    for (int eid : incident(v))
        if (edges_[static_cast<size_t>(eid)].color == c) ++count;
    return count;
}

int EdgeColoredGraph::find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) return -1;
    for (int eid : incident(u)) {
        const ColoredEdge& e = edges_[static_cast<size_t>(eid)];
        if (e.u == u && e.v == v) return eid;
    }
    return -1;
}

ColorDegreeProfile color_degree_profile(const EdgeColoredGraph& g) {
    ColorDegreeProfile p;
    p.color_degree.resize(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        p.color_degree[static_cast<size_t>(v)] = static_cast<int>(g.colors_at(v).size());
    if (!p.color_degree.empty()) {
        auto [lo, hi] = std::minmax_element(p.color_degree.begin(), p.color_degree.end());
        p.min_color_degree = *lo;
        p.max_color_degree = *hi;
    }
    return p;
}

MatchingCheck check_rainbow_matching(const EdgeColoredGraph& g,
                                     const std::vector<ColoredEdge>& m) {
    auto name = [](const ColoredEdge& e) {
        return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    };
    for (const ColoredEdge& e : m) {
        int eid = g.find_edge(e.u, e.v);
        if (eid < 0 || g.edge(eid).color != e.color)
            return {false, "unknown edge " + name(e) + " color " + std::to_string(e.color)};
    }
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = i + 1; j < m.size(); ++j) {
            const ColoredEdge &a = m[i], &b = m[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
                int shared = (a.u == b.u || a.u == b.v) ? a.u : a.v;
                return {false, "edges " + name(a) + " and " + name(b) + " share vertex " +
                                   std::to_string(shared)};
            }
            if (a.color == b.color)
                return {false, "edges " + name(a) + " and " + name(b) + ": repeated color " +
                                   std::to_string(a.color)};
        }
    }
    return {true, ""};
}

}  // namespace rainbow
