#include "rainbow/weights.hpp"

namespace rainbow {

W1Map compute_w1(const EdgeColoredGraph& g, const VertexPartition& p) {
    W1Map w;
    w.edge.assign(static_cast<size_t>(g.edge_count()), Rat(0));
    w.vertex.assign(static_cast<size_t>(g.vertex_count()), Rat(0));
    w.total = Rat(0);

    auto put = [&](int eid, const Rat& val) {
        const ColoredEdge& e = g.edge(eid);
        w.edge[static_cast<size_t>(eid)] = val;
        w.vertex[static_cast<size_t>(e.u)] += val;
        w.vertex[static_cast<size_t>(e.v)] += val;
        w.total += val;
    };
    auto touches_l = [&](int eid) {
        const ColoredEdge& e = g.edge(eid);
        return !p.in_c[static_cast<size_t>(e.u)] || !p.in_c[static_cast<size_t>(e.v)];
    };

    for (int si : p.s_star) {
        const MaxStar& s = p.stars[static_cast<size_t>(si)];
        Rat share(1, static_cast<BigInt>(s.l_vertices.size()));
        for (int eid : s.edge_ids)
            if (touches_l(eid)) put(eid, share);
    }
    for (int si : p.e0_star) {
        const MaxStar& s = p.stars[static_cast<size_t>(si)];
        for (int eid : s.edge_ids) {
            if (touches_l(eid)) {
                put(eid, Rat(1, 2));
                break;  // exactly one L-vertex, so exactly one such edge
            }
        }
    }
    return w;
}

W2Map compute_w2(const EdgeColoredGraph& g, const StarDecomposition& d, const Orientation& o) {
    W2Map w;
    w.edge.assign(static_cast<size_t>(g.edge_count()), Rat(0));
    w.wplus.assign(static_cast<size_t>(g.vertex_count()), Rat(0));
    w.wminus.assign(static_cast<size_t>(g.vertex_count()), Rat(0));
    w.total = Rat(0);

    for (int eid = 0; eid < g.edge_count(); ++eid) {
        const ColoredEdge& e = g.edge(eid);
        int t = o.tail(g, eid);
        BigInt den(o.color_outdeg[static_cast<size_t>(t)]);
        int star = d.star_of_edge[static_cast<size_t>(eid)];
        if (star >= 0) den *= d.stars[static_cast<size_t>(star)].size();
        Rat val(1, den);
        w.edge[static_cast<size_t>(eid)] = val;
        w.wplus[static_cast<size_t>(t)] += val;
        w.wminus[static_cast<size_t>(o.head(g, eid))] += val;
        w.color_total[e.color] += val;
        w.total += val;
    }
    w.vertex.assign(static_cast<size_t>(g.vertex_count()), Rat(0));
    for (int v = 0; v < g.vertex_count(); ++v)
        w.vertex[static_cast<size_t>(v)] =
            w.wplus[static_cast<size_t>(v)] + w.wminus[static_cast<size_t>(v)];
    return w;
}

W3Map compute_w3(const VertexPartition& p) {
    W3Map w;
    w.vertex.assign(static_cast<size_t>(p.n), Rat(0));
    w.total = Rat(0);
    for (int si : p.s_star) {
        const MaxStar& s = p.stars[static_cast<size_t>(si)];
        Rat share(1, static_cast<BigInt>(s.l_vertices.size()));
        for (int v : s.l_vertices) {
            w.vertex[static_cast<size_t>(v)] += share;
            w.total += share;
        }
    }
    for (int si : p.e0_star) {
        const MaxStar& s = p.stars[static_cast<size_t>(si)];
        w.vertex[static_cast<size_t>(s.l_vertices[0])] += Rat(1, 2);
        w.total += Rat(1, 2);
    }
    return w;
}

}  // namespace rainbow
