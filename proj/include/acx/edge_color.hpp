#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "acx/coloring.hpp"
#include "acx/forest.hpp"
#include "acx/graph.hpp"
#include "acx/random.hpp"

namespace acx {

/// How a run ended.
enum class RunStatus {
    completed,      // the algorithm halted on its own
    phase_limit,    // resampling phase cap hit; coloring and forest are partial
    restart_limit,  // restart cap hit before an accepted coloring appeared
};

const char* run_status_name(RunStatus s);

/// One resampling phase: the anchor edge together with the badly colored
/// cycle whose scope was redrawn.
struct EdgeLabel {
    int edge = 0;
    CycleRef cycle;
};

using EdgeWitnessForest = WitnessForest<EdgeLabel>;

struct EdgeColorOptions {
    long long phase_cap = 1'000'000;
    /// Test instrumentation: on every phase return, assert that the phase's
    /// anchor and every edge clean at phase entry lie on no badly colored
    /// even cycle of length >= 6. Expensive; off by default.
    bool check_progression = false;
};

struct MainEdgeOptions {
    long long phase_cap = 1'000'000;
    long long restart_cap = 10'000;
    bool check_progression = false;
};

struct EdgeTrialReport {
    RunStatus status = RunStatus::completed;
    long long phases = 0;           // resampling phases in the last pass
    long long root_iterations = 0;  // outer while-loop iterations in the last pass
    long long restarts = 0;         // extra passes demanded by the accept loop
    std::uint64_t seed = 0;
    bool palette_below_guarantee = false;  // K < 2*max_degree - 1
};

struct EdgeColorResult {
    EdgeColoring coloring;
    EdgeWitnessForest forest;
    EdgeTrialReport report;
};

/// Fresh uniform coloring of every edge, drawn in edge id order.
EdgeColoring random_edge_coloring(const Graph& g, int palette, RandomStream& stream);

/// One resampling pass: color all edges uniformly, then while some edge lies
/// on a badly colored even cycle of length >= 6, take the least such edge,
/// its least such cycle, and redraw the cycle's scope (recursively fixing the
/// scope before returning to the caller's scan). Records one forest node per
/// phase. Halts when no badly colored cycle of even length >= 6 remains.
EdgeColorResult edge_color(const Graph& g, int palette, RandomStream& stream,
                           const EdgeColorOptions& options = {});

/// Accept loop around edge_color: rerun it until the resulting coloring is
/// strongly proper (proper with no bichromatic 4-cycle). On success the
/// coloring is strongly proper and free of badly colored cycles of even
/// length >= 6, hence acyclic.
EdgeColorResult main_algorithm_edges(const Graph& g, int palette, RandomStream& stream,
                                     const MainEdgeOptions& options = {});

enum class ValidationStatus { success, failure, infeasible };

struct ValidationResult {
    ValidationStatus status = ValidationStatus::success;
    /// 1-based index into the forest's label sequence at which the walk
    /// failed; -1 otherwise.
    long long step = -1;
    std::string detail;
};

/// Structural feasibility of a witness forest: valid depth sequence; every
/// label a genuine even cycle of length >= 6 through its anchor edge; roots
/// and sibling groups with pairwise distinct anchors; every child's anchor
/// inside its parent's redraw scope. Returns an explanation, or nullopt when
/// feasible.
std::optional<std::string> edge_forest_error(const Graph& g, const EdgeWitnessForest& f);

/// Replays a forest against a fresh stream: color all edges, then walk the
/// label sequence; at each node, if its cycle is badly colored redraw the
/// scope, otherwise fail at that step. A forest recorded by edge_color
/// validates successfully against a stream seeded identically.
ValidationResult edge_validation(const Graph& g, const EdgeWitnessForest& f, RandomStream& stream);

/// log of the forest weight: each node on a cycle of length 2k contributes
/// a factor (2*max_degree - 1)^-(2k-2). Empty forest has weight 1.
double edge_forest_log_weight(const EdgeWitnessForest& f, int max_degree);
double edge_forest_weight(const EdgeWitnessForest& f, int max_degree);

// --- plain-text serialization ------------------------------------------------
// Forest: one node per line, "depth edge_u edge_v cycle_v1 ... cycle_v2k",
// nodes in depth-first order. Coloring: one "edge_index color" line per edge.

void write_edge_forest(std::ostream& out, const Graph& g, const EdgeWitnessForest& f);
EdgeWitnessForest read_edge_forest(std::istream& in, const Graph& g);

void write_edge_coloring(std::ostream& out, const EdgeColoring& c);
EdgeColoring read_edge_coloring(std::istream& in, const Graph& g);

}  // namespace acx
