#include "doctest.h"

#include "rainbow/experiment.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/pipeline.hpp"
#include "rainbow/trace.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace rainbow;

TEST_CASE("target zero or below succeeds without touching the graph") {
    EdgeColoredGraph g(2, {{0, 1, 0}});
    for (int k : {0, -3}) {
        auto r = pipeline_solve(g, k, 100);
        CHECK(r.succeeded);
        CHECK(r.matching.size() == 0);
        CHECK(r.trace.stages == std::vector<std::string>{"trivial: target is zero"});
    }
}

TEST_CASE("an instance below the color degree floor is rejected up front") {
    EdgeColoredGraph g(3, {{0, 1, 0}, {1, 2, 1}});
    CHECK_THROWS_AS(pipeline_solve(g, 2, 100), std::invalid_argument);
    CHECK_THROWS_WITH(pipeline_solve(g, 2, 100),
                      "minimum color degree 1 is below the target 2");
}

TEST_CASE("two-colored K_{2,2} walks through every stage and fails honestly") {
    // No rainbow pair exists, the instance classifies as none of the three
    // cases, every constructive attempt fails, and the exhaustive fallback
    // proves the negative.
    auto g = gen_cayley(2);
    PipelineArtifacts art;
    auto r = pipeline_solve(g, 2, 1000000, 0, &art);

    CHECK_FALSE(r.succeeded);
    CHECK(r.trace.fallback_used);
    CHECK_FALSE(r.budget_exceeded);
    CHECK(r.matching.size() <= 1);
    CHECK(r.nodes > 0);
    CHECK(r.trace.case_label == "nocase");
    CHECK(r.trace.failure_reason == "no rainbow matching of the target size exists");
    CHECK(r.trace.recursion_depth == 0);

    CHECK(r.trace.stages ==
          std::vector<std::string>{
              "reduce: removed 0 edges, 4 remain",
              "decompose: 0 stars, 4 single edges",
              "orient: seed 0, 2 vertices with out-edges",
              "classify: nocase (mass=2 |C|=2 |L|=2)",
              "case1: failed (peeling ended after 1 of 2 steps)",
              "case2: failed (ran out of colors after 1 of 2 steps)",
              "case3: failed (no witness: min vertex weight >= 1)",
              "fallback: exact search, budget 1000000",
          });

    CHECK(art.label.kind == CaseKind::NoCase);
    CHECK(art.label.mass == rat(2));
    CHECK(art.label.c_size == 2);
    CHECK(art.label.l_size == 2);
    CHECK(art.label.case1_threshold == rat(10));  // 5k^2/2
    CHECK(art.label.case2_threshold == rat(7));   // 7k^2/4
    REQUIRE(art.attempts.size() == 3);
    CHECK(art.attempts[0].trace.algorithm == "case1");
    CHECK(art.attempts[1].trace.algorithm == "case2");
    CHECK(art.attempts[2].trace.algorithm == "case3");
    for (const SolveResult& a : art.attempts) CHECK_FALSE(a.succeeded);
}

TEST_CASE("a starved fallback budget is reported as exceeded") {
    auto g = gen_cayley(4);
    auto r = pipeline_solve(g, 4, 10, 0);
    CHECK_FALSE(r.succeeded);
    CHECK(r.trace.fallback_used);
    CHECK(r.budget_exceeded);
    CHECK(r.trace.failure_reason == "exact search budget exhausted");
    CHECK(r.trace.stages.back() == "fallback: exact search, budget 10");
}

TEST_CASE("the cyclic-table transversal is found constructively") {
    auto g = gen_cayley(3);
    PipelineArtifacts art;
    auto r = pipeline_solve(g, 3, 1000000, 0, &art);
    CHECK(r.succeeded);
    CHECK(r.matching.size() == 3);
    CHECK(is_rainbow_matching(g, r.matching));
    CHECK_FALSE(r.trace.fallback_used);
    CHECK(r.nodes == 0);
    CHECK(art.attempts.size() == 1);
    CHECK(r.trace.stages.back() == "case1: found a matching of size 3");
}

TEST_CASE("matchings found after reduction are valid in the original graph") {
    auto g = gen_onefactorization(3);
    auto r = pipeline_solve(g, 3, 1000000, 0);
    CHECK(r.succeeded);
    CHECK(r.matching.size() == 3);
    CHECK(is_rainbow_matching(g, r.matching));
    // The reduction strips K_6 down before any case runs.
    CHECK(r.trace.stages[0] == "reduce: removed 6 edges, 9 remain");
}

TEST_CASE("the pipeline solves the random family at theorem scale") {
    for (int k = 2; k <= 3; ++k) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto g = gen_random_mindeg(default_n_for(k), k, 3 * k, 0.1, seed);
            PipelineArtifacts art;
            auto r = pipeline_solve(g, k, 1000000, seed, &art);
            CHECK(r.succeeded);
            CHECK(r.matching.size() == k);
            CHECK(is_rainbow_matching(g, r.matching));
            CHECK_FALSE(r.trace.fallback_used);
            CHECK(r.trace.recursion_depth == 0);
            CHECK(r.trace.stages.size() >= 5);
            CHECK_FALSE(art.attempts.empty());
        }
    }
}

TEST_CASE("identical inputs give byte-identical results") {
    auto g = gen_random_mindeg(18, 2, 6, 0.1, 42);
    auto a = pipeline_solve(g, 2, 1000000, 3);
    auto b = pipeline_solve(g, 2, 1000000, 3);
    CHECK(solve_result_json(a).dump() == solve_result_json(b).dump());
    // A different orientation seed may change the route but not validity.
    auto c = pipeline_solve(g, 2, 1000000, 4);
    CHECK(c.succeeded);
    CHECK(is_rainbow_matching(g, c.matching));
}
