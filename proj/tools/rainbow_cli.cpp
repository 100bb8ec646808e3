// Command line front end: generate instances, solve them, verify claimed
// matchings, and run experiment sweeps.
//
// Exit codes: 0 success; 1 solver fell short / verification failed /
// experiment found a verified-hypothesis failure; 2 bad input or
// configuration; 3 node budget exhausted before an answer.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/case_solvers.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/pipeline.hpp"
#include "rainbow/trace.hpp"

using nlohmann::json;

namespace {

struct GenArgs {
    std::string family = "random";
    int n = -1;
    int k = 2;
    int q = -1;
    double p = 0.1;
    std::uint64_t seed = 0;
    std::string out = "-";
};

struct SolveArgs {
    std::string in = "-";
    int k = 1;
    std::string alg = "pipeline";
    std::uint64_t budget = 10'000'000;
    std::uint64_t seed = 0;
    std::string trace_path;
};

struct VerifyArgs {
    std::string in = "-";
    std::string matching;
    int k = -1;
};

struct ExperimentArgs {
    int k = -1;
    int k_lo = 2;
    int k_hi = 2;
    int trials = 10;
    int n = -1;
    std::string family = "random";
    int q = -1;
    double p = 0.1;
    std::vector<std::string> algs{"pipeline"};
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
    std::string out = "experiment_report.json";
    std::string csv;
};

int write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

rainbow::EdgeColoredGraph read_instance(const std::string& path) {
    if (path == "-") return rainbow::load_instance(std::cin);
    return rainbow::load_instance_file(path);
}

int cmd_gen(const GenArgs& a) {
    int n = a.n;
    if (n < 0) {
        if (a.family == "random" || a.family == "proper-random")
            n = rainbow::default_n_for(a.k);
        else {
            std::cerr << "--n is required for family " << a.family << "\n";
            return 2;
        }
    }
    int q = a.q > 0 ? a.q : 3 * a.k;

    rainbow::EdgeColoredGraph g;
    std::vector<std::string> comments;
    std::ostringstream tag;
    if (a.family == "random") {
        g = rainbow::gen_random_mindeg(n, a.k, q, a.p, a.seed);
        tag << "family=random n=" << n << " k=" << a.k << " q=" << q << " p=" << a.p
            << " seed=" << a.seed;
    } else if (a.family == "proper-random") {
        g = rainbow::gen_proper_random(n, a.k, a.p, a.seed);
        tag << "family=proper-random n=" << n << " k=" << a.k << " p=" << a.p
            << " seed=" << a.seed;
    } else if (a.family == "cayley") {
        g = rainbow::gen_cayley(n);
        tag << "family=cayley n=" << n;
    } else {
        g = rainbow::gen_onefactorization(n);
        tag << "family=onefact n=" << n;
    }
    comments.push_back(tag.str());

    if (a.out == "-") {
        rainbow::save_instance(g, std::cout, comments);
        return 0;
    }
    std::ostringstream body;
    rainbow::save_instance(g, body, comments);
    return write_file(a.out, body.str());
}

json label_json(const rainbow::CaseLabel& l) {
    json j;
    j["case"] = rainbow::to_string(l.kind);
    j["mass"] = rainbow::rat_json(l.mass);
    j["c_size"] = l.c_size;
    j["l_size"] = l.l_size;
    j["case1_threshold"] = rainbow::rat_json(l.case1_threshold);
    j["case2_threshold"] = rainbow::rat_json(l.case2_threshold);
    return j;
}

json rat_array(const std::vector<rainbow::Rat>& xs) {
    json arr = json::array();
    for (const rainbow::Rat& x : xs) arr.push_back(rainbow::rat_json(x));
    return arr;
}

void fill_artifact_trace(json& tr, const rainbow::PipelineArtifacts& art) {
    json log = json::array();
    for (const rainbow::Deletion& d : art.reduction.log) {
        json e;
        e["edge"] = {d.edge.u, d.edge.v, d.edge.color};
        e["rule"] = rainbow::to_string(d.rule);
        log.push_back(e);
    }
    tr["reduction_log"] = log;

    json ori;
    ori["tail_is_u"] = art.orientation.src_is_u;
    ori["sequence"] = art.orientation.sequence;
    tr["orientation"] = ori;
    tr["label"] = label_json(art.label);

    json weights;
    if (art.w1) {
        weights["w1"] = {{"edge", rat_array(art.w1->edge)},
                         {"vertex", rat_array(art.w1->vertex)},
                         {"total", rainbow::rat_json(art.w1->total)}};
    }
    if (art.w2) {
        weights["w2"] = {{"edge", rat_array(art.w2->edge)},
                         {"out", rat_array(art.w2->wplus)},
                         {"in", rat_array(art.w2->wminus)},
                         {"total", rainbow::rat_json(art.w2->total)}};
    }
    if (art.w3) {
        weights["w3"] = {{"vertex", rat_array(art.w3->vertex)},
                         {"total", rainbow::rat_json(art.w3->total)}};
    }
    tr["weights"] = weights;
}

int cmd_solve(const SolveArgs& a) {
    rainbow::EdgeColoredGraph g = read_instance(a.in);
    rainbow::SolveResult result;
    json tr;

    if (a.alg == "exact") {
        rainbow::ExactResult ex = rainbow::exact_find(g, a.k, a.budget);
        result.target = a.k;
        result.trace.algorithm = "exact";
        result.matching = ex.best;
        result.succeeded = ex.found;
        result.budget_exceeded = ex.budget_exceeded;
        result.nodes = ex.nodes;
        if (!ex.found)
            result.trace.failure_reason = ex.budget_exceeded
                                              ? "budget exhausted"
                                              : "no rainbow matching of the target size exists";
    } else if (a.alg == "greedy") {
        result = rainbow::greedy_baseline(g, a.k);
    } else if (a.alg == "pipeline") {
        rainbow::PipelineArtifacts art;
        result = rainbow::pipeline_solve(g, a.k, a.budget, a.seed, &art);
        fill_artifact_trace(tr, art);
        json attempts = json::array();
        for (const rainbow::SolveResult& at : art.attempts)
            attempts.push_back(rainbow::solve_result_json(at));
        tr["attempts"] = attempts;
    } else {
        // case1 | case2 | case3: run the shared stages, then insist the
        // instance actually classifies as the requested case.
        if (a.k <= 0) {
            result.target = a.k;
            result.trace.algorithm = a.alg;
            result.succeeded = true;
        } else {
            rainbow::PipelineArtifacts art;
            art.reduction = rainbow::reduce_to_critical(g, a.k);
            const rainbow::EdgeColoredGraph& r = art.reduction.graph;
            art.decomposition = rainbow::star_decomposition(r);
            art.orientation = rainbow::orient(r, art.decomposition, a.seed);
            art.partition = rainbow::partition_vertices(r, art.decomposition, art.orientation);
            art.label = rainbow::classify_case(art.partition, r.vertex_count(), a.k);

            std::string actual = rainbow::to_string(art.label.kind);
            if (actual != a.alg) {
                std::cerr << "instance classifies as " << actual << ", not " << a.alg << "\n";
                return 2;
            }
            if (a.alg == "case1") {
                art.w1 = rainbow::compute_w1(r, art.partition);
                result = rainbow::case1_solve(r, art.partition, *art.w1, a.k);
            } else if (a.alg == "case2") {
                art.w2 = rainbow::compute_w2(r, art.decomposition, art.orientation);
                result = rainbow::case2_solve(r, art.decomposition, art.orientation, *art.w2,
                                              a.k);
            } else {
                art.w3 = rainbow::compute_w3(art.partition);
                result = rainbow::case3_solve(r, art.partition, *art.w3, a.k);
            }
            result.trace.case_label = actual;
            if (result.succeeded &&
                !rainbow::is_rainbow_matching(g, result.matching)) {
                result.succeeded = false;
                result.trace.failure_reason = "matching invalid in the original graph";
            }
            fill_artifact_trace(tr, art);
        }
    }

    tr["result"] = rainbow::solve_result_json(result);
    if (!a.trace_path.empty()) {
        int rc = write_file(a.trace_path, tr.dump(2) + "\n");
        if (rc != 0) return rc;
    }
    std::cout << rainbow::solve_result_json(result).dump(2) << "\n";
    if (result.succeeded) return 0;
    return result.budget_exceeded ? 3 : 1;
}

int cmd_verify(const VerifyArgs& a) {
    rainbow::EdgeColoredGraph g = read_instance(a.in);
    std::vector<rainbow::ColoredEdge> m = rainbow::load_matching_file(a.matching);
    rainbow::MatchingCheck check = rainbow::check_rainbow_matching(g, m);
    if (!check.ok) {
        std::cout << "invalid: " << check.violation << "\n";
        return 1;
    }
    if (a.k >= 0 && static_cast<int>(m.size()) < a.k) {
        std::cout << "invalid: size " << m.size() << " below target " << a.k << "\n";
        return 1;
    }
    std::cout << "ok size=" << m.size() << "\n";
    return 0;
}

int cmd_experiment(const ExperimentArgs& a) {
    rainbow::ExperimentConfig cfg;
    cfg.k_lo = a.k >= 1 ? a.k : a.k_lo;
    cfg.k_hi = a.k >= 1 ? a.k : a.k_hi;
    cfg.trials = a.trials;
    cfg.n_override = a.n;
    cfg.family = a.family;
    cfg.q_override = a.q;
    cfg.p = a.p;
    cfg.algorithms = a.algs;
    cfg.seed = a.seed;
    cfg.budget = a.budget;

    rainbow::ExperimentOutcome out = rainbow::run_experiment(cfg);
    int rc = write_file(a.out, out.report.dump(2) + "\n");
    if (rc != 0) return rc;
    rc = write_file(a.out + ".runtime.json", out.runtime.dump(2) + "\n");
    if (rc != 0) return rc;
    if (!a.csv.empty()) {
        rc = write_file(a.csv, rainbow::report_csv(out.report));
        if (rc != 0) return rc;
    }
    std::cout << "rows=" << out.row_count << " report=" << a.out
              << " theorem_ok=" << (out.theorem_ok ? "true" : "false") << "\n";
    return out.theorem_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colored graph toolkit: rainbow matchings by reduction, "
                 "orientation and case analysis"};
    app.require_subcommand(1);

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", ga.family, "random | proper-random | cayley | onefact")
        ->check(CLI::IsMember({"random", "proper-random", "cayley", "onefact"}));
    gen->add_option("--n", ga.n, "vertex count (cayley/onefact: half the vertices)");
    gen->add_option("--k", ga.k, "minimum color degree target");
    gen->add_option("--q", ga.q, "color count (random family; default 3k)");
    gen->add_option("--p", ga.p, "edge probability");
    gen->add_option("--seed", ga.seed, "RNG seed");
    gen->add_option("--out", ga.out, "output file, - for stdout");

    SolveArgs sa;
    CLI::App* solve = app.add_subcommand("solve", "find a rainbow matching of size k");
    solve->add_option("--in", sa.in, "instance file, - for stdin");
    solve->add_option("--k", sa.k, "target matching size")->required();
    solve->add_option("--alg", sa.alg, "pipeline | exact | greedy | case1 | case2 | case3")
        ->check(CLI::IsMember({"pipeline", "exact", "greedy", "case1", "case2", "case3"}));
    solve->add_option("--budget", sa.budget, "search node budget for exact/fallback");
    solve->add_option("--seed", sa.seed, "orientation seed");
    solve->add_option("--trace", sa.trace_path, "write a trace JSON file");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "check a claimed rainbow matching");
    verify->add_option("--in", va.in, "instance file, - for stdin");
    verify->add_option("--matching", va.matching, "matching file of 'u v c' lines")->required();
    verify->add_option("--k", va.k, "also require at least this size");

    ExperimentArgs ea;
    CLI::App* exp = app.add_subcommand("experiment", "run a sweep and write a report");
    exp->add_option("--k", ea.k, "single k (overrides --k-lo/--k-hi)");
    exp->add_option("--k-lo", ea.k_lo, "smallest k");
    exp->add_option("--k-hi", ea.k_hi, "largest k");
    exp->add_option("--trials", ea.trials, "trials per k");
    exp->add_option("--n", ea.n, "vertex count override");
    exp->add_option("--family", ea.family, "instance family")
        ->check(CLI::IsMember({"random", "proper-random", "cayley", "onefact"}));
    exp->add_option("--q", ea.q, "color count override");
    exp->add_option("--p", ea.p, "edge probability");
    exp->add_option("--algs", ea.algs, "algorithms to run")->delimiter(',');
    exp->add_option("--seed", ea.seed, "base seed; trial t uses seed+t");
    exp->add_option("--budget", ea.budget, "search node budget");
    exp->add_option("--out", ea.out, "report JSON path");
    exp->add_option("--csv", ea.csv, "also write rows as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(ga);
        if (*solve) return cmd_solve(sa);
        if (*verify) return cmd_verify(va);
        return cmd_experiment(ea);
    } catch (const rainbow::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
