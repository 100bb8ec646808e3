#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/reduce.hpp"
#include "rainbow/weights.hpp"

using namespace rainbow;

namespace {

struct Stage {
    EdgeColoredGraph g;
    StarDecomposition d;
    Orientation o;
    VertexPartition p;
};

Stage stage_for(const EdgeColoredGraph& g, std::uint64_t seed) {
    Stage s;
    s.g = g;
    s.d = star_decomposition(s.g);
    s.o = orient(s.g, s.d, seed);
    s.p = partition_vertices(s.g, s.d, s.o);
    return s;
}

}  // namespace

TEST_CASE("out-weights split 1/2, 1/4, 1/4 at a two-color source") {
    // vertex 0: one single-color edge plus a 2-edge star, color outdegree 2
    EdgeColoredGraph g(4, {{0, 1, 5}, {0, 2, 7}, {0, 3, 7}});
    Stage s = stage_for(g, 0);
    REQUIRE(s.o.tail(s.g, 0) == 0);
    W2Map w2 = compute_w2(s.g, s.d, s.o);
    CHECK(w2.edge[0] == rat(1, 2));  // e0 edge: 1/outdeg
    CHECK(w2.edge[1] == rat(1, 4));  // star edge: 1/(outdeg * star size)
    CHECK(w2.edge[2] == rat(1, 4));
    CHECK(w2.wplus[0] == rat(1));
    CHECK(w2.total == rat(1));
    CHECK(w2.color_total[5] == rat(1, 2));
    CHECK(w2.color_total[7] == rat(1, 2));
}

TEST_CASE("edge weights for the peeling case sit on C-L edges") {
    // star with three L-leaves puts 1/3 on each leaf edge
    EdgeColoredGraph g(4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}});
    Stage s = stage_for(g, 0);
    W1Map w1 = compute_w1(s.g, s.p);
    for (int eid = 0; eid < 3; ++eid) CHECK(w1.edge[static_cast<size_t>(eid)] == rat(1, 3));
    CHECK(w1.vertex[0] == rat(1));
    CHECK(w1.total == s.p.case1_mass);

    W3Map w3 = compute_w3(s.p);
    for (int v = 1; v < 4; ++v) CHECK(w3.vertex[static_cast<size_t>(v)] == rat(1, 3));
    CHECK(w3.vertex[0] == rat(0));
    CHECK(w3.total == s.p.case1_mass);
}

TEST_CASE("single-L-vertex stars weigh a half") {
    EdgeColoredGraph g(3, {{0, 1, 1}, {1, 2, 2}});  // both edges leave vertex 1
    Stage s = stage_for(g, 0);
    W1Map w1 = compute_w1(s.g, s.p);
    CHECK(w1.edge[0] == rat(1, 2));
    CHECK(w1.edge[1] == rat(1, 2));
    CHECK(w1.total == rat(1));
    W3Map w3 = compute_w3(s.p);
    CHECK(w3.vertex[0] == rat(1, 2));
    CHECK(w3.vertex[2] == rat(1, 2));
}

TEST_CASE("weight identities on critical instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        EdgeColoredGraph g0 = gen_random_mindeg(18, k, 3 * k, 0.2, seed);
        Stage s = stage_for(reduce_to_critical(g0, k).graph, seed);
        W1Map w1 = compute_w1(s.g, s.p);
        W2Map w2 = compute_w2(s.g, s.d, s.o);
        W3Map w3 = compute_w3(s.p);

        Rat sum1(0), sum2(0), sum3(0);
        for (int eid = 0; eid < s.g.edge_count(); ++eid) {
            const Rat& we = w1.edge[static_cast<size_t>(eid)];
            CHECK(we >= rat(0));
            CHECK(we <= rat(1, 2));
            sum1 += we;
            if (we > rat(0)) {
                // positive edges join C to L
                const ColoredEdge& e = s.g.edge(eid);
                CHECK(s.p.in_c[static_cast<size_t>(e.u)] !=
                      s.p.in_c[static_cast<size_t>(e.v)]);
            }
            CHECK(w2.edge[static_cast<size_t>(eid)] > rat(0));
            sum2 += w2.edge[static_cast<size_t>(eid)];
        }
        CHECK(sum1 == s.p.case1_mass);
        CHECK(w1.total == sum1);
        CHECK(sum2 == rat(static_cast<long long>(s.p.c_vertices.size())));
        CHECK(w2.total == sum2);

        for (int v : s.p.c_vertices) CHECK(w2.wplus[static_cast<size_t>(v)] == rat(1));
        for (int v : s.p.l_vertices) CHECK(w2.wplus[static_cast<size_t>(v)] == rat(0));
        for (int v = 0; v < s.g.vertex_count(); ++v) {
            CHECK(w2.vertex[static_cast<size_t>(v)] ==
                  w2.wplus[static_cast<size_t>(v)] + w2.wminus[static_cast<size_t>(v)]);
            // stability caps the accumulated in-weight
            CHECK(w2.vertex[static_cast<size_t>(v)] <= rat(k + 1, 2));
            sum3 += w3.vertex[static_cast<size_t>(v)];
        }
        for (int v : s.p.c_vertices) CHECK(w3.vertex[static_cast<size_t>(v)] == rat(0));
        CHECK(sum3 == s.p.case1_mass);
        CHECK(w3.total == sum3);

        // class totals add back up to the full weight
        Rat class_sum(0);
        for (const auto& [c, tot] : w2.color_total) class_sum += tot;
        CHECK(class_sum == w2.total);
    }
}
