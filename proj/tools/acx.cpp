// Command-line surface for the acyclic coloring toolkit.
//
// Subcommands: gen, color-edges, color-vertices, verify, oracle, rate,
// simulate, validate-forest. Every result is printed as JSON (stdout, or
// --out <file>). Exit codes: 0 success, 1 a cap stopped the run, 2 a
// verification or validation check failed, 3 any other error (bad input,
// refused instance, internal invariant).

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acx/asymptotics.hpp"
#include "acx/edge_color.hpp"
#include "acx/errors.hpp"
#include "acx/experiment.hpp"
#include "acx/generate.hpp"
#include "acx/graph.hpp"
#include "acx/graph_io.hpp"
#include "acx/random.hpp"
#include "acx/verify.hpp"
#include "acx/vertex_color.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitCapHit = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitError = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw acx::ParseError("cannot open " + out_path + " for writing");
    out << text << '\n';
}

void emit(const ordered_json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

acx::Graph load_graph(const std::string& path, const std::string& format) {
    if (path.empty()) throw acx::InvalidParamsError("--graph is required");
    if (format.empty()) return acx::read_graph_file(path);  // dispatch on the extension
    std::ifstream in(path);
    if (!in) throw acx::ParseError("cannot open " + path);
    return format == "dimacs" ? acx::read_dimacs(in) : acx::read_edge_list(in);
}

void save_graph(const std::string& path, const std::string& format, const acx::Graph& g) {
    if (format.empty()) {
        acx::write_graph_file(path, g);
        return;
    }
    std::ofstream out(path);
    if (!out) throw acx::ParseError("cannot open " + path + " for writing");
    if (format == "dimacs")
        acx::write_dimacs(out, g);
    else
        acx::write_edge_list(out, g);
}

ordered_json graph_json(const acx::Graph& g) {
    return {{"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"max_degree", g.max_degree()}};
}

ordered_json verdict_json(const acx::Verdict& v) {
    return {{"ok", v.ok}, {"witness_kind", v.witness_kind}, {"witness_elements", v.witness}};
}

int edge_guarantee(const acx::Graph& g) { return std::max(1, 2 * g.max_degree() - 1); }

// Palette resolution shared by the coloring and simulation commands: an
// explicit --k wins, otherwise the mode's guarantee bound. A sub-guarantee
// choice is allowed but flagged, on stderr and in the result JSON, because
// the accept loop is only known to halt from the guarantee upward.
int resolve_palette(int k, int guarantee, const char* what) {
    const int palette = k > 0 ? k : guarantee;
    if (palette < guarantee)
        std::fprintf(stderr, "warning: palette %d is below the %s guarantee %d; the accept loop may not terminate\n",
                     palette, what, guarantee);
    return palette;
}

struct CommonFlags {
    std::string graph_path;
    std::string format;  // empty = dispatch on extension
    std::string out_path;
    int k = 0;  // 0 = use the mode's guarantee palette
    double alpha = 1.0;
    std::uint64_t seed = 0;
    long long phase_cap = 1'000'000;
    long long restart_cap = 10'000;
};

void add_graph_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--graph", f.graph_path, "graph file to read")->required();
    cmd->add_option("--format", f.format, "graph file format (default: by extension)")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
}

// --- gen ----------------------------------------------------------------------

struct GenFlags {
    std::string kind;
    int n = 0, a = 0, b = 0, dim = 0, degree = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string graph_path, format, out_path;
};

int run_gen(const GenFlags& f) {
    acx::Graph g;
    ordered_json params;
    if (f.kind == "cycle") {
        g = acx::cycle_graph(f.n);
        params["n"] = f.n;
    } else if (f.kind == "path") {
        g = acx::path_graph(f.n);
        params["n"] = f.n;
    } else if (f.kind == "complete") {
        g = acx::complete_graph(f.n);
        params["n"] = f.n;
    } else if (f.kind == "complete_bipartite") {
        g = acx::complete_bipartite(f.a, f.b);
        params["a"] = f.a;
        params["b"] = f.b;
    } else if (f.kind == "hypercube") {
        g = acx::hypercube_graph(f.dim);
        params["dim"] = f.dim;
    } else if (f.kind == "gnp") {
        g = acx::gnp_graph(f.n, f.p, f.seed);
        params["n"] = f.n;
        params["p"] = f.p;
        params["seed"] = f.seed;
    } else if (f.kind == "random_regular") {
        g = acx::random_regular_graph(f.n, f.degree, f.seed);
        params["n"] = f.n;
        params["degree"] = f.degree;
        params["seed"] = f.seed;
    } else {
        throw acx::InvalidParamsError("unknown generator kind: " + f.kind);
    }

    ordered_json j;
    j["kind"] = f.kind;
    j["params"] = params;
    j["graph"] = graph_json(g);
    if (!f.graph_path.empty()) {
        save_graph(f.graph_path, f.format, g);
        j["file"] = f.graph_path;
    } else {
        auto list = ordered_json::array();
        for (const acx::Edge& e : g.edges()) list.push_back({e.u, e.v});
        j["edge_list"] = std::move(list);
    }
    emit(j, f.out_path);
    return kExitSuccess;
}

// --- color-edges / color-vertices ---------------------------------------------

struct ColorFlags : CommonFlags {
    bool single_pass = false;
    std::string coloring_out;
    std::string forest_out;
    std::string special_out;  // vertex mode only
};

void write_text(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path);
    if (!out) throw acx::ParseError("cannot open " + path + " for writing");
    body(out);
}

int run_color_edges(const ColorFlags& f) {
    const acx::Graph g = load_graph(f.graph_path, f.format);
    const int palette = resolve_palette(f.k, edge_guarantee(g), "2*max_degree-1");
    acx::RandomStream stream(f.seed, palette);

    acx::EdgeColorResult res;
    if (f.single_pass) {
        res = acx::edge_color(g, palette, stream, {.phase_cap = f.phase_cap});
    } else {
        res = acx::main_algorithm_edges(
            g, palette, stream, {.phase_cap = f.phase_cap, .restart_cap = f.restart_cap});
    }

    ordered_json j;
    j["mode"] = "edge";
    j["graph"] = graph_json(g);
    j["palette"] = palette;
    j["palette_below_guarantee"] = res.report.palette_below_guarantee;
    j["single_pass"] = f.single_pass;
    j["seed"] = f.seed;
    j["status"] = acx::run_status_name(res.report.status);
    j["phases"] = res.report.phases;
    j["root_iterations"] = res.report.root_iterations;
    j["restarts"] = res.report.restarts;
    j["forest_nodes"] = static_cast<long long>(res.forest.size());

    bool checks_ok = true;
    if (res.report.status == acx::RunStatus::completed) {
        const acx::Verdict proper = acx::is_proper_edge(g, res.coloring);
        const acx::Verdict strong = acx::is_strongly_proper(g, res.coloring);
        const acx::Verdict acyclic = acx::is_acyclic_edge(g, res.coloring);
        j["checks"] = {{"proper", verdict_json(proper)},
                       {"strongly_proper", verdict_json(strong)},
                       {"acyclic", verdict_json(acyclic)}};
        // A single pass only promises the absence of badly colored long
        // cycles, so its verdicts are informational rather than gating.
        if (!f.single_pass) checks_ok = proper.ok && strong.ok && acyclic.ok;
    }

    if (!f.coloring_out.empty())
        write_text(f.coloring_out, [&](std::ostream& o) { acx::write_edge_coloring(o, res.coloring); });
    if (!f.forest_out.empty())
        write_text(f.forest_out, [&](std::ostream& o) { acx::write_edge_forest(o, g, res.forest); });
    emit(j, f.out_path);
    if (res.report.status != acx::RunStatus::completed) return kExitCapHit;
    return checks_ok ? kExitSuccess : kExitCheckFailed;
}

int run_color_vertices(const ColorFlags& f) {
    const acx::Graph g = load_graph(f.graph_path, f.format);
    const auto idx = acx::SpecialPairsIndex::build(g, f.alpha);
    const int guarantee = acx::default_vertex_palette(g, f.alpha);
    const int palette = resolve_palette(f.k, guarantee, "ceil(alpha*max_degree^{4/3})+max_degree+1");
    acx::RandomStream stream(f.seed, palette);

    acx::VertexColorResult res;
    if (f.single_pass) {
        res = acx::vertex_color(g, idx, palette, stream, {.phase_cap = f.phase_cap});
    } else {
        res = acx::main_algorithm_vertices(
            g, idx, palette, stream, {.phase_cap = f.phase_cap, .restart_cap = f.restart_cap});
    }

    ordered_json j;
    j["mode"] = "vertex";
    j["graph"] = graph_json(g);
    j["alpha"] = f.alpha;
    j["special_cap"] = idx.cap();
    j["palette"] = palette;
    j["palette_below_guarantee"] = palette < guarantee;
    j["single_pass"] = f.single_pass;
    j["seed"] = f.seed;
    j["status"] = acx::run_status_name(res.report.status);
    j["phases"] = res.report.phases;
    j["root_iterations"] = res.report.root_iterations;
    j["restarts"] = res.report.restarts;
    j["forest_nodes"] = static_cast<long long>(res.forest.size());

    bool checks_ok = true;
    if (res.report.status == acx::RunStatus::completed) {
        const acx::Verdict proper = acx::is_proper_vertex(g, res.coloring);
        const acx::Verdict special = acx::is_specially_proper(g, idx, res.coloring);
        const acx::Verdict acyclic = acx::is_acyclic_vertex(g, res.coloring);
        j["checks"] = {{"proper", verdict_json(proper)},
                       {"specially_proper", verdict_json(special)},
                       {"acyclic", verdict_json(acyclic)}};
        if (!f.single_pass) checks_ok = proper.ok && special.ok && acyclic.ok;
    }

    if (!f.coloring_out.empty())
        write_text(f.coloring_out, [&](std::ostream& o) { acx::write_vertex_coloring(o, res.coloring); });
    if (!f.forest_out.empty())
        write_text(f.forest_out, [&](std::ostream& o) { acx::write_vertex_forest(o, res.forest); });
    if (!f.special_out.empty())
        write_text(f.special_out, [&](std::ostream& o) { acx::write_special_index(o, g, idx); });
    emit(j, f.out_path);
    if (res.report.status != acx::RunStatus::completed) return kExitCapHit;
    return checks_ok ? kExitSuccess : kExitCheckFailed;
}

// --- verify -------------------------------------------------------------------

struct VerifyFlags : CommonFlags {
    std::string mode;  // edge | vertex
    std::string coloring_path;
};

int run_verify(const VerifyFlags& f) {
    const acx::Graph g = load_graph(f.graph_path, f.format);
    std::ifstream in(f.coloring_path);
    if (!in) throw acx::ParseError("cannot open " + f.coloring_path);

    ordered_json j;
    j["mode"] = f.mode;
    j["graph"] = graph_json(g);
    bool ok = true;
    if (f.mode == "edge") {
        acx::EdgeColoring c = acx::read_edge_coloring(in, g);
        if (f.k > 0) c.palette = f.k;
        j["palette"] = c.palette;
        const acx::Verdict proper = acx::is_proper_edge(g, c);
        const acx::Verdict strong = acx::is_strongly_proper(g, c);
        const acx::Verdict acyclic = acx::is_acyclic_edge(g, c);
        j["checks"] = {{"proper", verdict_json(proper)},
                       {"strongly_proper", verdict_json(strong)},
                       {"acyclic", verdict_json(acyclic)}};
        ok = proper.ok && strong.ok && acyclic.ok;
    } else {
        acx::VertexColoring c = acx::read_vertex_coloring(in, g);
        if (f.k > 0) c.palette = f.k;
        j["palette"] = c.palette;
        j["alpha"] = f.alpha;
        const auto idx = acx::SpecialPairsIndex::build(g, f.alpha);
        const acx::Verdict proper = acx::is_proper_vertex(g, c);
        const acx::Verdict special = acx::is_specially_proper(g, idx, c);
        const acx::Verdict acyclic = acx::is_acyclic_vertex(g, c);
        j["checks"] = {{"proper", verdict_json(proper)},
                       {"specially_proper", verdict_json(special)},
                       {"acyclic", verdict_json(acyclic)}};
        ok = proper.ok && special.ok && acyclic.ok;
    }
    j["ok"] = ok;
    emit(j, f.out_path);
    return ok ? kExitSuccess : kExitCheckFailed;
}

// --- oracle -------------------------------------------------------------------

struct OracleFlags : CommonFlags {
    std::string mode;
};

int run_oracle(const OracleFlags& f) {
    const acx::Graph g = load_graph(f.graph_path, f.format);
    const acx::ColoringMode mode =
        f.mode == "edge" ? acx::ColoringMode::edge : acx::ColoringMode::vertex;
    const int max_colors = f.k > 0 ? f.k
                           : mode == acx::ColoringMode::edge
                               ? edge_guarantee(g)
                               : acx::default_vertex_palette(g, f.alpha);
    const std::optional<int> minimum = acx::brute_force_min_acyclic(g, mode, max_colors);

    ordered_json j;
    j["mode"] = f.mode;
    j["graph"] = graph_json(g);
    j["max_colors"] = max_colors;
    j["minimum"] = minimum ? ordered_json(*minimum) : ordered_json(nullptr);
    emit(j, f.out_path);
    return kExitSuccess;
}

// --- rate ---------------------------------------------------------------------

struct RateFlags {
    long long delta = 0;
    double alpha = 0.0;
    bool has_alpha = false;
    int order = 0;
    std::string out_path;
};

int run_rate(const RateFlags& f) {
    const acx::AsymptoticsResult r =
        f.has_alpha ? acx::vertex_rate(f.delta, f.alpha) : acx::edge_rate(f.delta);

    ordered_json j;
    j["delta"] = r.delta;
    if (r.alpha) j["alpha"] = *r.alpha;
    j["q"] = r.q;
    j["tau"] = r.tau;
    j["rho"] = r.rho;
    j["residual"] = r.residual;
    if (f.order > 0) {
        const acx::SeriesCoeffs s = f.has_alpha ? acx::vertex_series(f.delta, f.alpha, f.order)
                                                : acx::edge_series(f.delta, f.order);
        j["series"] = {{"order", f.order},
                       {"log_coeff", s.log_coeff(f.order)},
                       {"ratio", s.ratio(f.order)}};
    }
    emit(j, f.out_path);
    return kExitSuccess;
}

// --- simulate -----------------------------------------------------------------

struct SimulateFlags : CommonFlags {
    std::string mode = "edge";
    int trials = 100;
    bool single_pass = false;
};

int run_simulate(const SimulateFlags& f) {
    const acx::Graph g = load_graph(f.graph_path, f.format);
    acx::ExperimentConfig cfg;
    cfg.mode = f.mode == "edge" ? acx::ColoringMode::edge : acx::ColoringMode::vertex;
    cfg.trials = f.trials;
    cfg.base_seed = f.seed;
    cfg.alpha = f.alpha;
    cfg.phase_cap = f.phase_cap;
    cfg.restart_cap = f.restart_cap;
    cfg.use_main_algorithm = !f.single_pass;
    if (f.k > 0) {
        const int guarantee = cfg.mode == acx::ColoringMode::edge
                                  ? edge_guarantee(g)
                                  : acx::default_vertex_palette(g, f.alpha);
        resolve_palette(f.k, guarantee,
                        cfg.mode == acx::ColoringMode::edge
                            ? "2*max_degree-1"
                            : "ceil(alpha*max_degree^{4/3})+max_degree+1");
        cfg.palette = f.k;
    }

    const acx::ExperimentSummary s = acx::run_trials(g, cfg);
    emit(acx::summary_to_json(s), f.out_path);
    return s.completed == s.trials ? kExitSuccess : kExitCapHit;
}

// --- validate-forest ------------------------------------------------------------

struct ValidateFlags : CommonFlags {
    std::string mode;
    std::string forest_path;
};

int run_validate_forest(const ValidateFlags& f) {
    const acx::Graph g = load_graph(f.graph_path, f.format);
    std::ifstream in(f.forest_path);
    if (!in) throw acx::ParseError("cannot open " + f.forest_path);

    ordered_json j;
    j["mode"] = f.mode;
    j["graph"] = graph_json(g);
    acx::ValidationResult r;
    std::optional<std::string> structural;
    if (f.mode == "edge") {
        const acx::EdgeWitnessForest forest = acx::read_edge_forest(in, g);
        const int palette = f.k > 0 ? f.k : edge_guarantee(g);
        j["palette"] = palette;
        j["forest_nodes"] = static_cast<long long>(forest.size());
        structural = acx::edge_forest_error(g, forest);
        acx::RandomStream stream(f.seed, palette);
        r = acx::edge_validation(g, forest, stream);
        j["log_weight"] = acx::edge_forest_log_weight(forest, g.max_degree());
    } else {
        const auto idx = acx::SpecialPairsIndex::build(g, f.alpha);
        const acx::VertexWitnessForest forest = acx::read_vertex_forest(in, g);
        const int palette = f.k > 0 ? f.k : acx::default_vertex_palette(g, f.alpha);
        j["palette"] = palette;
        j["alpha"] = f.alpha;
        j["forest_nodes"] = static_cast<long long>(forest.size());
        structural = acx::vertex_forest_error(g, idx, forest);
        acx::RandomStream stream(f.seed, palette);
        r = acx::vertex_validation(g, idx, forest, stream);
        j["log_weight"] = acx::vertex_forest_log_weight(forest, f.alpha, g.max_degree());
    }
    j["seed"] = f.seed;
    j["feasible"] = !structural.has_value();
    if (structural) j["feasibility_error"] = *structural;
    j["status"] = r.status == acx::ValidationStatus::success   ? "success"
                  : r.status == acx::ValidationStatus::failure ? "failure"
                                                               : "infeasible";
    j["step"] = r.step;
    j["detail"] = r.detail;
    emit(j, f.out_path);
    return r.status == acx::ValidationStatus::success ? kExitSuccess : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomized acyclic graph coloring: algorithms, verification, asymptotics"};
    app.require_subcommand(1);

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
    gen_cmd->add_option("kind", gen.kind,
                        "cycle | path | complete | complete_bipartite | hypercube | gnp | random_regular")
        ->required();
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--a", gen.a, "first side size (complete_bipartite)");
    gen_cmd->add_option("--b", gen.b, "second side size (complete_bipartite)");
    gen_cmd->add_option("--dim", gen.dim, "dimension (hypercube)");
    gen_cmd->add_option("--p", gen.p, "edge probability (gnp)");
    gen_cmd->add_option("--d", gen.degree, "degree (random_regular)");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--graph", gen.graph_path, "write the graph to this file");
    gen_cmd->add_option("--format", gen.format, "output format (default: by extension)")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    gen_cmd->add_option("--out", gen.out_path, "write the JSON result to this file");

    ColorFlags ce;
    auto* ce_cmd = app.add_subcommand("color-edges", "acyclically color the edges");
    add_graph_flags(ce_cmd, ce);
    ce_cmd->add_option("--k", ce.k, "palette size (default 2*max_degree-1)");
    ce_cmd->add_option("--seed", ce.seed, "stream seed");
    ce_cmd->add_option("--phase-cap", ce.phase_cap, "max resampling phases per pass");
    ce_cmd->add_option("--restart-cap", ce.restart_cap, "max accept-loop restarts");
    ce_cmd->add_flag("--single-pass", ce.single_pass, "one resampling pass, no accept loop");
    ce_cmd->add_option("--coloring-out", ce.coloring_out, "write the coloring to this file");
    ce_cmd->add_option("--forest-out", ce.forest_out, "write the witness forest to this file");
    ce_cmd->add_option("--out", ce.out_path, "write the JSON result to this file");

    ColorFlags cv;
    auto* cv_cmd = app.add_subcommand("color-vertices", "acyclically color the vertices");
    add_graph_flags(cv_cmd, cv);
    cv_cmd->add_option("--k", cv.k,
                       "palette size (default ceil(alpha*max_degree^{4/3})+max_degree+1)");
    cv_cmd->add_option("--alpha", cv.alpha, "special-pair density parameter")->check(CLI::PositiveNumber);
    cv_cmd->add_option("--seed", cv.seed, "stream seed");
    cv_cmd->add_option("--phase-cap", cv.phase_cap, "max resampling phases per pass");
    cv_cmd->add_option("--restart-cap", cv.restart_cap, "max accept-loop restarts");
    cv_cmd->add_flag("--single-pass", cv.single_pass, "one resampling pass, no accept loop");
    cv_cmd->add_option("--coloring-out", cv.coloring_out, "write the coloring to this file");
    cv_cmd->add_option("--forest-out", cv.forest_out, "write the witness forest to this file");
    cv_cmd->add_option("--special-out", cv.special_out, "write the special-pair index to this file");
    cv_cmd->add_option("--out", cv.out_path, "write the JSON result to this file");

    VerifyFlags vf;
    auto* vf_cmd = app.add_subcommand("verify", "check a coloring file");
    add_graph_flags(vf_cmd, vf);
    vf_cmd->add_option("--mode", vf.mode, "edge | vertex")
        ->required()
        ->check(CLI::IsMember({"edge", "vertex"}));
    vf_cmd->add_option("--coloring", vf.coloring_path, "coloring file to check")->required();
    vf_cmd->add_option("--k", vf.k, "palette bound to check against (default: max color used)");
    vf_cmd->add_option("--alpha", vf.alpha, "special-pair density parameter (vertex mode)")
        ->check(CLI::PositiveNumber);
    vf_cmd->add_option("--out", vf.out_path, "write the JSON result to this file");

    OracleFlags of;
    auto* of_cmd = app.add_subcommand("oracle", "exhaustive minimum acyclic palette");
    add_graph_flags(of_cmd, of);
    of_cmd->add_option("--mode", of.mode, "edge | vertex")
        ->required()
        ->check(CLI::IsMember({"edge", "vertex"}));
    of_cmd->add_option("--k", of.k, "largest palette to try (default: the mode's guarantee)");
    of_cmd->add_option("--alpha", of.alpha, "sets the vertex-mode default palette")
        ->check(CLI::PositiveNumber);
    of_cmd->add_option("--out", of.out_path, "write the JSON result to this file");

    RateFlags rf;
    auto* rf_cmd = app.add_subcommand("rate", "characteristic root and growth rate");
    rf_cmd->add_option("--delta", rf.delta, "max degree")->required();
    auto* alpha_opt =
        rf_cmd->add_option("--alpha", rf.alpha, "vertex mode when given, edge mode otherwise")
            ->check(CLI::PositiveNumber);
    rf_cmd->add_option("--order", rf.order, "also report the series ratio R_n/R_{n-1} at this order");
    rf_cmd->add_option("--out", rf.out_path, "write the JSON result to this file");

    SimulateFlags sf;
    auto* sf_cmd = app.add_subcommand("simulate", "run repeated trials and aggregate");
    add_graph_flags(sf_cmd, sf);
    sf_cmd->add_option("--mode", sf.mode, "edge | vertex")->check(CLI::IsMember({"edge", "vertex"}));
    sf_cmd->add_option("--k", sf.k, "palette size (default: the mode's guarantee)");
    sf_cmd->add_option("--alpha", sf.alpha, "special-pair density parameter (vertex mode)")
        ->check(CLI::PositiveNumber);
    sf_cmd->add_option("--trials", sf.trials, "trial count")->check(CLI::PositiveNumber);
    sf_cmd->add_option("--seed", sf.seed, "base seed; trial i uses child_seed(base, i)");
    sf_cmd->add_option("--phase-cap", sf.phase_cap, "max resampling phases per pass");
    sf_cmd->add_option("--restart-cap", sf.restart_cap, "max accept-loop restarts");
    sf_cmd->add_flag("--single-pass", sf.single_pass, "one resampling pass per trial");
    sf_cmd->add_option("--out", sf.out_path, "write the JSON summary to this file");

    ValidateFlags lf;
    auto* lf_cmd = app.add_subcommand("validate-forest", "replay a witness forest against a seed");
    add_graph_flags(lf_cmd, lf);
    lf_cmd->add_option("--mode", lf.mode, "edge | vertex")
        ->required()
        ->check(CLI::IsMember({"edge", "vertex"}));
    lf_cmd->add_option("--forest", lf.forest_path, "forest file to replay")->required();
    lf_cmd->add_option("--seed", lf.seed, "stream seed to replay against");
    lf_cmd->add_option("--k", lf.k, "palette size (default: the mode's guarantee)");
    lf_cmd->add_option("--alpha", lf.alpha, "special-pair density parameter (vertex mode)")
        ->check(CLI::PositiveNumber);
    lf_cmd->add_option("--out", lf.out_path, "write the JSON result to this file");

    try {
        app.parse(argc, argv);
        rf.has_alpha = alpha_opt->count() > 0;
        if (*gen_cmd) return run_gen(gen);
        if (*ce_cmd) return run_color_edges(ce);
        if (*cv_cmd) return run_color_vertices(cv);
        if (*vf_cmd) return run_verify(vf);
        if (*of_cmd) return run_oracle(of);
        if (*rf_cmd) return run_rate(rf);
        if (*sf_cmd) return run_simulate(sf);
        if (*lf_cmd) return run_validate_forest(lf);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitError;
    } catch (const acx::VerificationFailedError& e) {
        std::fprintf(stderr, "verification failed: %s\n", e.what());
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
}
