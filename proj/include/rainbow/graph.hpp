#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

/// One undirected edge with a color id. Stored normalized (u < v).
struct ColoredEdge {
    int u = -1;
    int v = -1;
    long long color = -1;

    friend bool operator==(const ColoredEdge& a, const ColoredEdge& b) {
        return a.u == b.u && a.v == b.v && a.color == b.color;
    }
};

/// Simple undirected graph with colored edges. Vertex ids are dense 0..n-1,
/// color ids are arbitrary non-negative integers. Immutable after
/// construction; edges are kept sorted by (u, v) and pairs are unique.
class EdgeColoredGraph {
public:
    EdgeColoredGraph() = default;

    /// Normalizes endpoint order, sorts edges, builds incidence lists.
    /// Throws std::invalid_argument on self-loops, duplicate vertex pairs,
    /// out-of-range endpoints, or negative colors.
    EdgeColoredGraph(int n, std::vector<ColoredEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<ColoredEdge>& edges() const { return edges_; }
    const ColoredEdge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    /// Edge ids incident to v, ascending.
    const std::vector<int>& incident(int v) const { return incident_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(incident_[static_cast<size_t>(v)].size()); }

    /// Distinct colors present in the graph, ascending.
    std::vector<long long> colors() const;
    /// Distinct colors on edges at v, ascending.
    std::vector<long long> colors_at(int v) const;
    /// Number of edges at v carrying color c.
    int color_multiplicity_at(int v, long long c) const;

    /// Edge id of {u, v} in either endpoint order, or -1.
    int find_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<ColoredEdge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Per-vertex color degrees (number of distinct colors at each vertex) with
/// their minimum and maximum. For an edgeless graph min/max are 0.
struct ColorDegreeProfile {
    std::vector<int> color_degree;
    int min_color_degree = 0;
    int max_color_degree = 0;
};

ColorDegreeProfile color_degree_profile(const EdgeColoredGraph& g);

/// A set of edges intended to be pairwise vertex-disjoint with pairwise
/// distinct colors.
struct Matching {
    std::vector<ColoredEdge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

/// Result of checking a claimed rainbow matching. `violation` names the first
/// offending edge or pair; it is empty iff `ok`.
struct MatchingCheck {
    bool ok = false;
    std::string violation;
};

/// Verifies that every edge exists in g (same color) and that the set is a
/// rainbow matching. Unknown edges are reported as violations.
MatchingCheck check_rainbow_matching(const EdgeColoredGraph& g, const std::vector<ColoredEdge>& m);

inline bool is_rainbow_matching(const EdgeColoredGraph& g, const std::vector<ColoredEdge>& m) {
    return check_rainbow_matching(g, m).ok;
}
inline bool is_rainbow_matching(const EdgeColoredGraph& g, const Matching& m) {
    return check_rainbow_matching(g, m.edges).ok;
}

/// Theorem hypothesis n > 4.25 k^2, evaluated exactly (4n > 17 k^2).
inline bool theorem_hypothesis(long long n, long long k) { return 4 * n > 17 * k * k; }

}  // namespace rainbow
