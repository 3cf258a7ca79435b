#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acx/edge_color.hpp"
#include "acx/graph.hpp"
#include "acx/verify.hpp"

namespace acx {

struct ExperimentConfig {
    ColoringMode mode = ColoringMode::edge;
    int trials = 1;
    std::uint64_t base_seed = 0;
    // Palette size; when absent the mode's guarantee palette is used
    // (2*max_degree - 1 for edges, ceil(alpha*max_degree^{4/3}) +
    // max_degree + 1 for vertices).
    std::optional<int> palette;
    double alpha = 1.0;  // vertex mode only
    long long phase_cap = 1'000'000;
    long long restart_cap = 10'000;
    // true: run the accept loop (restarts until strongly/specially proper);
    // false: a single resampling pass per trial.
    bool use_main_algorithm = true;
};

struct TrialRecord {
    std::uint64_t seed = 0;
    RunStatus status = RunStatus::completed;
    long long phases = 0;
    long long root_iterations = 0;
    long long restarts = 0;
    long long forest_nodes = 0;
    // Measured on halting trials. For accept-loop runs all three gate the
    // trial (a false value is a hard error); for single-pass runs only
    // verified_accept gates (no badly colored target remains) while the
    // properness and acyclicity fields are informational.
    bool verified_proper = false;
    bool verified_accept = false;
    bool verified_acyclic = false;
};

// Least-squares line through the log of the empirical survival function,
// evaluated at the distinct observed phase counts where at least 20 trials
// remain. Purely descriptive; never an acceptance gate.
struct TailFit {
    double c = 0.0;  // exp(slope): survival decays like c^n when c < 1
    double log_intercept = 0.0;
    int points = 0;
};

struct ExperimentSummary {
    int palette = 0;
    int trials = 0;
    int completed = 0;  // trials with RunStatus::completed
    long long total_phases = 0;
    long long max_phases = 0;
    long long total_restarts = 0;
    // Fraction of halting trials whose gating checks all passed. run_trials
    // throws on any failure, so a returned summary always reports 1 (or 0
    // when nothing halted).
    double verification_pass_rate = 0.0;
    std::vector<TrialRecord> records;  // ordered by trial index
    std::map<long long, long long> phase_histogram;  // phases -> trial count
    // Empirical P[phases >= n] at n = 0 and every observed phase count.
    std::vector<std::pair<long long, double>> survival;
    std::optional<TailFit> tail_fit;  // absent with < 2 distinct fit points
};

// Runs the configured coloring algorithm once per trial, each trial on its
// own stream seeded with child_seed(base_seed, index). Every halting output
// is verified; a failed gating check throws VerificationFailedError since it
// indicates an implementation bug. Cap-limited trials are aggregated, not
// fatal.
ExperimentSummary run_trials(const Graph& g, const ExperimentConfig& cfg);

// Deterministic rendering (fixed key order, no timestamps or machine data):
// equal graphs and configurations yield byte-identical strings.
std::string summary_to_json(const ExperimentSummary& s);

}  // namespace acx
