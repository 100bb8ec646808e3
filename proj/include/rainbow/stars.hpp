#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A monochromatic star with at least two edges: all edges share `center`
/// and carry `color`. Leaves ascending; one edge per leaf.
struct Star {
    long long color = -1;
    int center = -1;
    std::vector<int> leaves;
    std::vector<int> edge_ids;
    int size() const { return static_cast<int>(edge_ids.size()); }
};

/// Partition of the edge set by color-class structure.
///
/// Edges whose color repeats at both endpoints (so the class contains a
/// 3-edge path or a triangle through them) land in `violations`. Removing
/// those always leaves every color class a disjoint union of stars: stars
/// with >= 2 edges fill `stars`, single edges whose color touches no
/// remaining neighbor fill `e0`. On graphs whose color classes are already
/// star forests, `violations` is empty and `e0` is exactly the set of edges
/// not adjacent to any same-colored edge.
struct StarDecomposition {
    std::vector<Star> stars;            // sorted by (color, center)
    std::vector<int> e0;                // edge ids, ascending
    std::vector<int> violations;        // edge ids, ascending
    std::vector<int> star_of_edge;      // edge id -> index into stars, or -1
    enum EdgeKind : signed char { InStar = 0, InE0 = 1, InViolations = 2 };
    std::vector<signed char> edge_kind; // edge id -> EdgeKind
};

StarDecomposition star_decomposition(const EdgeColoredGraph& g);

}  // namespace rainbow
