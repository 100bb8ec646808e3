#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace rainbow {

struct ExperimentConfig {
    int k_lo = 2;
    int k_hi = 2;
    int trials = 10;
    int n_override = -1;      // -1: smallest n with n > 4.25 k^2
    std::string family = "random";  // random | proper-random | cayley | onefact
    int q_override = -1;      // -1: 3k (random family)
    double p = 0.1;
    std::vector<std::string> algorithms{"pipeline"};
    std::uint64_t seed = 0;   // trial t uses seed + t
    std::uint64_t budget = 10'000'000;
};

struct ExperimentOutcome {
    nlohmann::json report;   // deterministic: {"schema":1, config, rows, aggregates}
    nlohmann::json runtime;  // wall-clock timings, kept out of the report
    bool theorem_ok = true;  // no verified-hypothesis row failed
    int row_count = 0;
};

/// Smallest n satisfying n > 4.25 k^2.
int default_n_for(int k);

/// Runs trials x k-values x algorithms, re-verifying every claimed matching.
/// Rows are emitted in (k, trial, algorithm) order; the report depends only
/// on the config. Throws std::invalid_argument on bad config values.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// Flattens report rows to CSV (header + one line per row).
std::string report_csv(const nlohmann::json& report);

}  // namespace rainbow
