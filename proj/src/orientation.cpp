#include "rainbow/orientation.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace rainbow {

namespace {

// Mutable orientation with incrementally maintained color outdegrees.
struct OrientState {
    const EdgeColoredGraph& g;
    std::vector<bool> src_is_u;
    std::vector<std::map<long long, int>> out_mult;  // vertex -> color -> out-edges
    std::vector<int> outdeg;                         // distinct out-colors
    std::vector<int> indeg;

    OrientState(const EdgeColoredGraph& graph, std::vector<bool> src)
        : g(graph),
          src_is_u(std::move(src)),
          out_mult(static_cast<size_t>(graph.vertex_count())),
          outdeg(static_cast<size_t>(graph.vertex_count()), 0),
          indeg(static_cast<size_t>(graph.vertex_count()), 0) {
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            const ColoredEdge& e = g.edge(eid);
            int t = src_is_u[static_cast<size_t>(eid)] ? e.u : e.v;
            int h = src_is_u[static_cast<size_t>(eid)] ? e.v : e.u;
            auto& mm = out_mult[static_cast<size_t>(t)];
            if (++mm[e.color] == 1) ++outdeg[static_cast<size_t>(t)];
            ++indeg[static_cast<size_t>(h)];
        }
    }

    int tail(int eid) const {
        const ColoredEdge& e = g.edge(eid);
        return src_is_u[static_cast<size_t>(eid)] ? e.u : e.v;
    }
    int head(int eid) const {
        const ColoredEdge& e = g.edge(eid);
        return src_is_u[static_cast<size_t>(eid)] ? e.v : e.u;
    }

    void flip(int eid) {
        const ColoredEdge& e = g.edge(eid);
        int t = tail(eid), h = head(eid);
        auto& tm = out_mult[static_cast<size_t>(t)];
        if (--tm[e.color] == 0) {
            tm.erase(e.color);
            --outdeg[static_cast<size_t>(t)];
        }
        auto& hm = out_mult[static_cast<size_t>(h)];
        if (++hm[e.color] == 1) ++outdeg[static_cast<size_t>(h)];
        --indeg[static_cast<size_t>(h)];
        ++indeg[static_cast<size_t>(t)];
        src_is_u[static_cast<size_t>(eid)] = !src_is_u[static_cast<size_t>(eid)];
    }

    std::vector<int> sequence() const {
        std::vector<int> s = outdeg;
        std::sort(s.begin(), s.end(), std::greater<int>());
        return s;
    }
};

// e0 in-edges per vertex under the current orientation, edge ids ascending.
std::vector<std::vector<int>> e0_in_edges(const OrientState& st, const StarDecomposition& d) {
    std::vector<std::vector<int>> in(st.outdeg.size());
    for (int eid : d.e0) in[static_cast<size_t>(st.head(eid))].push_back(eid);
    return in;
}

// First move (vertex moves ascending, then edge moves ascending) whose flip
// makes the descending outdegree sequence lexicographically larger.
std::optional<OrientationMove> find_improving(OrientState& st, const StarDecomposition& d) {
    const std::vector<int> base = st.sequence();
    auto in = e0_in_edges(st, d);

    auto improves = [&]() { return st.sequence() > base; };

    for (int v = 0; v < st.g.vertex_count(); ++v) {
        const std::vector<int>& iv = in[static_cast<size_t>(v)];
        if (iv.empty()) continue;
        // Reverse every e0 in-edge of v at once.
        for (int eid : iv) st.flip(eid);
        bool good = improves();
        for (int eid : iv) st.flip(eid);
        if (good) return OrientationMove{2, v, -1, -1};
        // Reverse a pair of e0 in-edges of v.
        for (size_t i = 0; i + 1 < iv.size(); ++i) {
            for (size_t j = i + 1; j < iv.size(); ++j) {
                st.flip(iv[i]);
                st.flip(iv[j]);
                good = improves();
                st.flip(iv[i]);
                st.flip(iv[j]);
                if (good) return OrientationMove{3, v, iv[i], iv[j]};
            }
        }
    }
    for (int eid : d.e0) {
        st.flip(eid);
        bool good = improves();
        st.flip(eid);
        if (good) return OrientationMove{1, -1, eid, -1};
    }
    return std::nullopt;
}

void apply_move(OrientState& st, const StarDecomposition& d, const OrientationMove& mv) {
    if (mv.kind == 1) {
        st.flip(mv.e1);
    } else if (mv.kind == 2) {
        auto in = e0_in_edges(st, d);
        for (int eid : in[static_cast<size_t>(mv.vertex)]) st.flip(eid);
    } else {
        st.flip(mv.e1);
        st.flip(mv.e2);
    }
}

void local_search(OrientState& st, const StarDecomposition& d) {
    while (auto mv = find_improving(st, d)) apply_move(st, d, *mv);
}

// Directs sequence-neutral e0 edges from the lower vertex id. Returns whether
// anything flipped.
bool canonicalize(OrientState& st, const StarDecomposition& d) {
    bool changed = false;
    for (int eid : d.e0) {
        if (st.tail(eid) <= st.head(eid)) continue;
        const std::vector<int> before = st.sequence();
        st.flip(eid);
        if (st.sequence() == before) {
            changed = true;
        } else {
            st.flip(eid);
        }
    }
    return changed;
}

Orientation snapshot(const OrientState& st) {
    Orientation o;
    o.src_is_u = st.src_is_u;
    o.color_outdeg = st.outdeg;
    o.indeg = st.indeg;
    o.sequence = st.sequence();
    return o;
}

}  // namespace

Orientation orient(const EdgeColoredGraph& g, const StarDecomposition& d, std::uint64_t seed) {
    if (!d.violations.empty())
        throw std::invalid_argument("cannot orient: some color class is not a star forest");

    std::vector<bool> src(static_cast<size_t>(g.edge_count()), true);
    for (const Star& s : d.stars)
        for (int eid : s.edge_ids) src[static_cast<size_t>(eid)] = (g.edge(eid).u == s.center);
    std::mt19937_64 rng(seed);
    for (int eid : d.e0) src[static_cast<size_t>(eid)] = (rng() & 1u) == 0;

    OrientState st(g, std::move(src));
    // Alternate search and canonicalization until a full round is quiet; the
    // sequence never decreases, so this terminates.
    do {
        local_search(st, d);
    } while (canonicalize(st, d));
    return snapshot(st);
}

std::optional<OrientationMove> find_improving_move(const EdgeColoredGraph& g,
                                                   const StarDecomposition& d,
                                                   const Orientation& o) {
    OrientState st(g, o.src_is_u);
    return find_improving(st, d);
}

}  // namespace rainbow
