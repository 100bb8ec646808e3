#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/orientation.hpp"
#include "rainbow/reduce.hpp"

using namespace rainbow;

TEST_CASE("two-colored path orients into a double source") {
    EdgeColoredGraph g(3, {{0, 1, 1}, {1, 2, 2}});
    StarDecomposition d = star_decomposition(g);
    for (std::uint64_t seed : {0ull, 1ull, 2ull, 7ull, 99ull}) {
        Orientation o = orient(g, d, seed);
        CHECK(o.tail(g, 0) == 1);
        CHECK(o.tail(g, 1) == 1);
        CHECK(o.color_outdeg[1] == 2);
        CHECK(o.sequence == std::vector<int>{2, 0, 0});
        CHECK(o.indeg == std::vector<int>{1, 0, 1});
    }
}

TEST_CASE("a lone edge points from the smaller id regardless of seed") {
    EdgeColoredGraph g(2, {{0, 1, 3}});
    StarDecomposition d = star_decomposition(g);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Orientation o = orient(g, d, seed);
        CHECK(o.tail(g, 0) == 0);
        CHECK(o.head(g, 0) == 1);
    }
}

TEST_CASE("star edges always leave the center") {
    EdgeColoredGraph g(5, {{0, 1, 5}, {1, 2, 5}, {1, 3, 5}, {3, 4, 8}});
    StarDecomposition d = star_decomposition(g);
    Orientation o = orient(g, d, 0);
    for (int eid : d.stars[0].edge_ids) CHECK(o.tail(g, eid) == 1);
}

TEST_CASE("decompositions with violations are rejected") {
    EdgeColoredGraph g(4, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}});
    StarDecomposition d = star_decomposition(g);
    CHECK_THROWS_AS(orient(g, d, 0), std::invalid_argument);
}

TEST_CASE("stable orientations on critical graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        EdgeColoredGraph g0 =
            gen_random_mindeg(16 + static_cast<int>(seed % 4), k, 3 * k, 0.2, seed);
        EdgeColoredGraph g = reduce_to_critical(g0, k).graph;
        StarDecomposition d = star_decomposition(g);
        Orientation o = orient(g, d, seed);

        // no single, pair, or full-vertex reversal improves the sequence
        CHECK_FALSE(find_improving_move(g, d, o).has_value());

        ColorDegreeProfile prof = color_degree_profile(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            // in-edges carry pairwise distinct colors
            std::set<long long> in_colors;
            int indeg = 0;
            for (int eid : g.incident(v)) {
                if (o.head(g, eid) != v) continue;
                ++indeg;
                CHECK(in_colors.insert(g.edge(eid).color).second);
            }
            CHECK(indeg == o.indeg[static_cast<size_t>(v)]);
            CHECK(o.indeg[static_cast<size_t>(v)] <=
                  prof.color_degree[static_cast<size_t>(v)]);
            // vertices above the minimum color degree absorb nothing
            if (prof.color_degree[static_cast<size_t>(v)] >= k + 1)
                CHECK(o.indeg[static_cast<size_t>(v)] == 0);
        }

        // sequence is the sorted outdegree multiset
        std::vector<int> expect = o.color_outdeg;
        std::sort(expect.rbegin(), expect.rend());
        CHECK(o.sequence == expect);
    }
}

TEST_CASE("orientation is deterministic per seed") {
    EdgeColoredGraph g = reduce_to_critical(gen_random_mindeg(18, 2, 6, 0.15, 5), 2).graph;
    StarDecomposition d = star_decomposition(g);
    Orientation a = orient(g, d, 11);
    Orientation b = orient(g, d, 11);
    CHECK(a.src_is_u == b.src_is_u);
    CHECK(a.sequence == b.sequence);
}
