#include "rainbow/partition.hpp"

#include <algorithm>

namespace rainbow {

const char* to_string(CaseKind kind) {
    switch (kind) {
        case CaseKind::Case1: return "case1";
        case CaseKind::Case2: return "case2";
        case CaseKind::Case3: return "case3";
        default: return "nocase";
    }
}

VertexPartition partition_vertices(const EdgeColoredGraph& g, const StarDecomposition& d,
                                   const Orientation& o) {
    VertexPartition p;
    p.n = g.vertex_count();
    p.in_c.assign(static_cast<size_t>(p.n), false);
    for (int v = 0; v < p.n; ++v) {
        if (o.color_outdeg[static_cast<size_t>(v)] > 0) {
            p.in_c[static_cast<size_t>(v)] = true;
            p.c_vertices.push_back(v);
        } else {
            p.l_vertices.push_back(v);
        }
    }

    // All maximal monochromatic stars: multi-edge stars first, then the
    // single-edge color classes with the tail as center.
    for (const Star& s : d.stars) {
        MaxStar ms;
        ms.color = s.color;
        ms.center = s.center;
        ms.edge_ids = s.edge_ids;
        if (!p.in_c[static_cast<size_t>(s.center)]) ms.l_vertices.push_back(s.center);
        for (int leaf : s.leaves)
            if (!p.in_c[static_cast<size_t>(leaf)]) ms.l_vertices.push_back(leaf);
        std::sort(ms.l_vertices.begin(), ms.l_vertices.end());
        p.stars.push_back(std::move(ms));
    }
    for (int eid : d.e0) {
        const ColoredEdge& e = g.edge(eid);
        MaxStar ms;
        ms.color = e.color;
        ms.center = o.tail(g, eid);
        ms.edge_ids = {eid};
        for (int x : {e.u, e.v})
            if (!p.in_c[static_cast<size_t>(x)]) ms.l_vertices.push_back(x);
        std::sort(ms.l_vertices.begin(), ms.l_vertices.end());
        p.stars.push_back(std::move(ms));
    }

    for (size_t i = 0; i < p.stars.size(); ++i) {
        size_t l = p.stars[i].l_vertices.size();
        if (l >= 2)
            p.s_star.push_back(static_cast<int>(i));
        else if (l == 1)
            p.e0_star.push_back(static_cast<int>(i));
    }
    p.case1_mass = rat(static_cast<long long>(p.s_star.size())) +
                   rat(static_cast<long long>(p.e0_star.size()), 2);
    return p;
}

CaseLabel classify_case(const VertexPartition& p, int n, int k) {
    CaseLabel label;
    label.mass = p.case1_mass;
    label.c_size = static_cast<long long>(p.c_vertices.size());
    label.l_size = static_cast<long long>(p.l_vertices.size());
    label.case1_threshold = rat(5LL * k * k, 2);
    label.case2_threshold = rat(7LL * k * k, 4);
    (void)n;
    if (label.mass >= label.case1_threshold)
        label.kind = CaseKind::Case1;
    else if (rat(label.c_size) >= label.case2_threshold)
        label.kind = CaseKind::Case2;
    else if (rat(label.l_size) > label.mass)
        label.kind = CaseKind::Case3;
    else
        label.kind = CaseKind::NoCase;
    return label;
}

}  // namespace rainbow
