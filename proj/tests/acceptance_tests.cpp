// Acceptance harness: one pass/fail line per criterion, exit code = number of
// failed criteria. An optional argv[1] in 1..8 runs a single criterion.
// Thresholds, ensembles and tolerances are fixed here on purpose — edit with
// care, they are the contract the library is held to.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/pipeline.hpp"

using namespace rainbow;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. The pipeline must deliver a verified size-k rainbow matching on every
//    random instance big enough for the guarantee (n > 4.25 k^2, floor k),
//    within a minute for the 200-instance ensemble.
bool criterion_1(std::string& detail) {
    auto t0 = Clock::now();
    int ok = 0, total = 0;
    for (int k = 2; k <= 3; ++k) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            auto g = gen_random_mindeg(default_n_for(k), k, 3 * k, 0.1, i);
            auto r = pipeline_solve(g, k, 10'000'000, i);
            ++total;
            if (r.succeeded && r.matching.size() >= k && is_rainbow_matching(g, r.matching)) ++ok;
        }
    }
    double elapsed = seconds_since(t0);
    detail = std::to_string(ok) + "/" + std::to_string(total) + " solved in " +
             std::to_string(elapsed) + "s";
    return ok == total && elapsed < 60.0;
}

// 2. The branch-and-bound maximum must agree with full subset enumeration on
//    200 small instances.
bool criterion_2(std::string& detail) {
    int ok = 0, total = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto g = oracles::small_instance(i, 7 + static_cast<int>(i % 2),
                                         2 + static_cast<int>(i % 4), 0.3, 12);
        auto ex = exact_max(g, 10'000'000);
        ++total;
        if (!ex.budget_exceeded && ex.r == oracles::max_rainbow_by_subsets(g)) ++ok;
    }
    detail = std::to_string(ok) + "/" + std::to_string(total) + " agree";
    return ok == total;
}

// 3. The structured families must hit their known maximum rainbow matching
//    sizes: the cyclic table on K_{n,n} gives n for odd n but n-1 for even n,
//    and the round-robin coloring of K_4 famously allows only a single edge.
bool criterion_3(std::string& detail) {
    const int cyclic_expected[] = {1, 1, 3, 3, 5};
    detail.clear();
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        auto ex = exact_max(gen_cayley(n), 100'000'000);
        if (ex.budget_exceeded || ex.r != cyclic_expected[n - 1]) {
            ok = false;
            detail += " cyclic(" + std::to_string(n) + ")=" + std::to_string(ex.r);
        }
    }
    const int roundrobin_expected[] = {1, 3, 4};
    for (int m = 2; m <= 4; ++m) {
        auto ex = exact_max(gen_onefactorization(m), 100'000'000);
        if (ex.budget_exceeded || ex.r != roundrobin_expected[m - 2]) {
            ok = false;
            detail += " roundrobin(" + std::to_string(m) + ")=" + std::to_string(ex.r);
        }
    }
    if (ok) detail = "cyclic 1..5 = {1,1,3,3,5}, round-robin 2..4 = {1,3,4}";
    return ok;
}

// 4. Any instance with color degree floor k admits a rainbow matching of at
//    least floor(k/2): check the exact maximum on 100 random instances.
bool criterion_4(std::string& detail) {
    int ok = 0, total = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        int k = 2 + static_cast<int>(i % 3);
        auto g = gen_random_mindeg(4 * k + 2, k, 2 * k, 0.3, i);
        auto ex = exact_max(g, 10'000'000);
        ++total;
        if (!ex.budget_exceeded && ex.r >= k / 2) ++ok;
    }
    detail = std::to_string(ok) + "/" + std::to_string(total) + " above floor(k/2)";
    return ok == total;
}

// 5. Criticality reduction must preserve whether a size-k rainbow matching
//    exists, and must keep the color degree floor at k.
bool criterion_5(std::string& detail) {
    int ok = 0, total = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        int k = 2 + static_cast<int>(i % 2);
        auto g = gen_random_mindeg(7 + static_cast<int>(i % 4), k, 3 * k, 0.3, i);
        auto red = reduce_to_critical(g, k);
        auto before = exact_find(g, k, 100'000'000);
        auto after = exact_find(red.graph, k, 100'000'000);
        ++total;
        if (before.found == after.found && !before.budget_exceeded && !after.budget_exceeded &&
            color_degree_profile(red.graph).min_color_degree >= k)
            ++ok;
    }
    detail = std::to_string(ok) + "/" + std::to_string(total) + " equivalent";
    return ok == total;
}

// 6. Orientations must be locally optimal (no improving move), keep in-edges
//    rainbow at every vertex, point star edges away from their centers, and
//    publish the sorted outdegree sequence they claim.
bool criterion_6(std::string& detail) {
    int ok = 0, total = 0;
    for (int k = 2; k <= 3; ++k) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            auto g = gen_random_mindeg(default_n_for(k), k, 3 * k, 0.1, i);
            auto red = reduce_to_critical(g, k);
            auto dec = star_decomposition(red.graph);
            auto ori = orient(red.graph, dec, i);
            ++total;

            bool good = !find_improving_move(red.graph, dec, ori).has_value();
            for (int v = 0; good && v < red.graph.vertex_count(); ++v) {
                std::set<long long> in_colors;
                int indeg = 0;
                for (int eid : red.graph.incident(v)) {
                    if (ori.head(red.graph, eid) != v) continue;
                    ++indeg;
                    if (!in_colors.insert(red.graph.edge(eid).color).second) good = false;
                }
                if (indeg != ori.indeg[static_cast<size_t>(v)]) good = false;
            }
            for (const Star& s : dec.stars)
                for (int eid : s.edge_ids)
                    if (ori.tail(red.graph, eid) != s.center) good = false;
            std::vector<int> sorted = ori.color_outdeg;
            std::sort(sorted.rbegin(), sorted.rend());
            if (sorted != ori.sequence) good = false;
            if (good) ++ok;
        }
    }
    detail = std::to_string(ok) + "/" + std::to_string(total) + " stable and consistent";
    return ok == total;
}

// 7. Weight systems: the mass weighting must total the star mass with no edge
//    above 1/2 and positive edges crossing the C/L split; the out-weighting
//    must put exactly 1 on every C vertex (totalling |C|) with no vertex
//    above (k+1)/2; the vertex weighting must total the star mass and live on
//    L only; and no color class may carry out-weight above 3(k-1)/2. The last
//    cap is only forced for counterexample graphs, and real critical
//    instances are not counterexamples — it is measured here regardless, and
//    the observed violations fail this criterion honestly.
bool criterion_7(std::string& detail) {
    int instances = 0, identity_bad = 0, class_cap_classes = 0, class_cap_instances = 0;
    for (int k = 2; k <= 3; ++k) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            auto g = gen_random_mindeg(default_n_for(k), k, 3 * k, 0.1, i);
            auto red = reduce_to_critical(g, k);
            auto dec = star_decomposition(red.graph);
            auto ori = orient(red.graph, dec, i);
            auto part = partition_vertices(red.graph, dec, ori);
            ++instances;

            bool good = true;
            auto w1 = compute_w1(red.graph, part);
            if (w1.total != part.case1_mass) good = false;
            for (int eid = 0; eid < red.graph.edge_count(); ++eid) {
                if (w1.edge[static_cast<size_t>(eid)] > rat(1, 2)) good = false;
                if (w1.edge[static_cast<size_t>(eid)] > Rat(0)) {
                    const ColoredEdge& e = red.graph.edge(eid);
                    if (part.in_c[static_cast<size_t>(e.u)] == part.in_c[static_cast<size_t>(e.v)])
                        good = false;
                }
            }

            auto w2 = compute_w2(red.graph, dec, ori);
            if (w2.total != rat(static_cast<long long>(part.c_vertices.size()))) good = false;
            for (int v = 0; v < red.graph.vertex_count(); ++v) {
                Rat expect = part.in_c[static_cast<size_t>(v)] ? rat(1) : rat(0);
                if (w2.wplus[static_cast<size_t>(v)] != expect) good = false;
                if (w2.vertex[static_cast<size_t>(v)] > rat(k + 1, 2)) good = false;
            }

            auto w3 = compute_w3(part);
            if (w3.total != part.case1_mass) good = false;
            for (int v : part.c_vertices)
                if (w3.vertex[static_cast<size_t>(v)] != Rat(0)) good = false;

            if (!good) ++identity_bad;

            int over = 0;
            for (const auto& [color, tot] : w2.color_total)
                if (tot > rat(3LL * (k - 1), 2)) ++over;
            if (over > 0) {
                ++class_cap_instances;
                class_cap_classes += over;
            }
        }
    }
    detail = "identities/caps clean on " + std::to_string(instances - identity_bad) + "/" +
             std::to_string(instances) + "; class cap 3(k-1)/2 violated by " +
             std::to_string(class_cap_classes) + " classes on " +
             std::to_string(class_cap_instances) + "/" + std::to_string(instances) +
             " instances";
    return identity_bad == 0 && class_cap_classes == 0;
}

// 8. At guarantee scale every reduced instance must classify into one of the
//    three cases — the fourth label exists only as an explicit result value.
bool criterion_8(std::string& detail) {
    int ok = 0, total = 0;
    for (int k = 2; k <= 3; ++k) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            auto g = gen_random_mindeg(default_n_for(k), k, 3 * k, 0.1, i);
            auto red = reduce_to_critical(g, k);
            auto dec = star_decomposition(red.graph);
            auto ori = orient(red.graph, dec, i);
            auto part = partition_vertices(red.graph, dec, ori);
            auto label = classify_case(part, red.graph.vertex_count(), k);
            ++total;
            if (label.kind != CaseKind::NoCase) ++ok;
        }
    }
    detail = std::to_string(ok) + "/" + std::to_string(total) + " classified";
    return ok == total;
}

struct Criterion {
    int number;
    const char* what;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "pipeline solves the random family at guarantee scale", criterion_1},
    {2, "exact search matches subset enumeration", criterion_2},
    {3, "structured families hit their known values", criterion_3},
    {4, "color degree floor k forces at least floor(k/2)", criterion_4},
    {5, "criticality reduction preserves solvability", criterion_5},
    {6, "orientations are stable with rainbow in-edges", criterion_6},
    {7, "weight systems meet their identities and caps", criterion_7},
    {8, "guarantee-scale instances always classify", criterion_8},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 8) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..8]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.number != only) continue;
        std::string detail;
        bool ok = c.run(detail);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.what;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
