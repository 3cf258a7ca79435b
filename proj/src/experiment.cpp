#include "acx/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"

#include "acx/errors.hpp"
#include "acx/random.hpp"
#include "acx/vertex_color.hpp"

namespace acx {

namespace {

void require_all_verified(const TrialRecord& rec, const char* what) {
    if (rec.verified_proper && rec.verified_accept && rec.verified_acyclic) return;
    throw VerificationFailedError(std::string(what) + " output failed verification on seed " +
                                  std::to_string(rec.seed));
}

TrialRecord run_edge_trial(const Graph& g, const ExperimentConfig& cfg, int palette,
                           std::uint64_t seed) {
    TrialRecord rec;
    rec.seed = seed;
    RandomStream stream(seed, palette);
    if (cfg.use_main_algorithm) {
        MainEdgeOptions opt;
        opt.phase_cap = cfg.phase_cap;
        opt.restart_cap = cfg.restart_cap;
        const auto res = main_algorithm_edges(g, palette, stream, opt);
        rec.status = res.report.status;
        rec.phases = res.report.phases;
        rec.root_iterations = res.report.root_iterations;
        rec.restarts = res.report.restarts;
        rec.forest_nodes = static_cast<long long>(res.forest.size());
        if (rec.status == RunStatus::completed) {
            rec.verified_proper = is_proper_edge(g, res.coloring).ok;
            rec.verified_accept = is_strongly_proper(g, res.coloring).ok;
            rec.verified_acyclic = is_acyclic_edge(g, res.coloring).ok;
            require_all_verified(rec, "accepted edge coloring");
        }
    } else {
        EdgeColorOptions opt;
        opt.phase_cap = cfg.phase_cap;
        const auto res = edge_color(g, palette, stream, opt);
        rec.status = res.report.status;
        rec.phases = res.report.phases;
        rec.root_iterations = res.report.root_iterations;
        rec.forest_nodes = static_cast<long long>(res.forest.size());
        if (rec.status == RunStatus::completed) {
            bool clean = true;
            for (int e = 0; clean && e < g.edge_count(); ++e) {
                clean = !find_least_bad_edge_cycle(g, res.coloring.color, e).has_value();
            }
            rec.verified_accept = clean;
            rec.verified_proper = is_proper_edge(g, res.coloring).ok;
            rec.verified_acyclic = is_acyclic_edge(g, res.coloring).ok;
            if (!clean) {
                throw VerificationFailedError(
                    "edge pass halted with a badly colored cycle left on seed " +
                    std::to_string(seed));
            }
        }
    }
    return rec;
}

TrialRecord run_vertex_trial(const Graph& g, const SpecialPairsIndex& idx,
                             const ExperimentConfig& cfg, int palette, std::uint64_t seed) {
    TrialRecord rec;
    rec.seed = seed;
    RandomStream stream(seed, palette);
    if (cfg.use_main_algorithm) {
        MainVertexOptions opt;
        opt.phase_cap = cfg.phase_cap;
        opt.restart_cap = cfg.restart_cap;
        const auto res = main_algorithm_vertices(g, idx, palette, stream, opt);
        rec.status = res.report.status;
        rec.phases = res.report.phases;
        rec.root_iterations = res.report.root_iterations;
        rec.restarts = res.report.restarts;
        rec.forest_nodes = static_cast<long long>(res.forest.size());
        if (rec.status == RunStatus::completed) {
            rec.verified_proper = is_proper_vertex(g, res.coloring).ok;
            rec.verified_accept = is_specially_proper(g, idx, res.coloring).ok;
            rec.verified_acyclic = is_acyclic_vertex(g, res.coloring).ok;
            require_all_verified(rec, "accepted vertex coloring");
        }
    } else {
        VertexColorOptions opt;
        opt.phase_cap = cfg.phase_cap;
        const auto res = vertex_color(g, idx, palette, stream, opt);
        rec.status = res.report.status;
        rec.phases = res.report.phases;
        rec.root_iterations = res.report.root_iterations;
        rec.forest_nodes = static_cast<long long>(res.forest.size());
        if (rec.status == RunStatus::completed) {
            bool clean = true;
            for (int u = 0; clean && u < g.vertex_count(); ++u) {
                clean = !find_least_bad_set(g, idx, res.coloring.color, u).has_value();
            }
            rec.verified_accept = clean;
            rec.verified_proper = is_proper_vertex(g, res.coloring).ok;
            rec.verified_acyclic = is_acyclic_vertex(g, res.coloring).ok;
            if (!clean) {
                throw VerificationFailedError(
                    "vertex pass halted with a badly colored target left on seed " +
                    std::to_string(seed));
            }
        }
    }
    return rec;
}

std::optional<TailFit> fit_tail(const std::vector<std::pair<long long, long long>>& counts_ge,
                                long long trials) {
    std::vector<std::pair<double, double>> pts;  // (n, log survival)
    for (const auto& [n, count] : counts_ge) {
        if (count < 20) continue;
        pts.emplace_back(static_cast<double>(n),
                         std::log(static_cast<double>(count) / static_cast<double>(trials)));
    }
    if (pts.size() < 2) return std::nullopt;
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) return std::nullopt;
    TailFit fit;
    const double slope = sxy / sxx;
    fit.c = std::exp(slope);
    fit.log_intercept = my - slope * mx;
    fit.points = static_cast<int>(pts.size());
    return fit;
}

}  // namespace

ExperimentSummary run_trials(const Graph& g, const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw InvalidParamsError("an experiment needs at least one trial");
    if (cfg.palette && *cfg.palette < 1) throw InvalidParamsError("palette must be positive");
    if (cfg.phase_cap < 1 || cfg.restart_cap < 1)
        throw InvalidParamsError("phase and restart caps must be positive");

    ExperimentSummary s;
    s.trials = cfg.trials;

    std::optional<SpecialPairsIndex> idx;
    if (cfg.mode == ColoringMode::vertex) {
        idx = SpecialPairsIndex::build(g, cfg.alpha);
        s.palette = cfg.palette ? *cfg.palette : default_vertex_palette(g, cfg.alpha);
    } else {
        s.palette = cfg.palette ? *cfg.palette : std::max(1, 2 * g.max_degree() - 1);
    }

    long long halted = 0;
    long long passed = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = child_seed(cfg.base_seed, static_cast<std::uint64_t>(t));
        TrialRecord rec = cfg.mode == ColoringMode::edge
                              ? run_edge_trial(g, cfg, s.palette, seed)
                              : run_vertex_trial(g, *idx, cfg, s.palette, seed);
        if (rec.status == RunStatus::completed) {
            ++s.completed;
            ++halted;
            ++passed;  // run_*_trial throws on any gating failure
        }
        s.total_phases += rec.phases;
        s.max_phases = std::max(s.max_phases, rec.phases);
        s.total_restarts += rec.restarts;
        ++s.phase_histogram[rec.phases];
        s.records.push_back(std::move(rec));
    }
    s.verification_pass_rate =
        halted > 0 ? static_cast<double>(passed) / static_cast<double>(halted) : 0.0;

    // Survival P[phases >= n] at n = 0 and each observed count, walking the
    // histogram from the top so each entry is a suffix sum.
    std::vector<std::pair<long long, long long>> counts_ge;
    long long suffix = 0;
    for (auto it = s.phase_histogram.rbegin(); it != s.phase_histogram.rend(); ++it) {
        suffix += it->second;
        counts_ge.emplace_back(it->first, suffix);
    }
    std::reverse(counts_ge.begin(), counts_ge.end());
    if (counts_ge.empty() || counts_ge.front().first != 0) {
        counts_ge.insert(counts_ge.begin(), {0, s.trials});
    }
    for (const auto& [n, count] : counts_ge) {
        s.survival.emplace_back(n, static_cast<double>(count) / static_cast<double>(s.trials));
    }
    s.tail_fit = fit_tail(counts_ge, s.trials);
    return s;
}

std::string summary_to_json(const ExperimentSummary& s) {
    nlohmann::ordered_json j;
    j["palette"] = s.palette;
    j["trials"] = s.trials;
    j["completed"] = s.completed;
    j["total_phases"] = s.total_phases;
    j["max_phases"] = s.max_phases;
    j["total_restarts"] = s.total_restarts;
    j["verification_pass_rate"] = s.verification_pass_rate;
    j["phase_histogram"] = nlohmann::ordered_json::array();
    for (const auto& [phases, count] : s.phase_histogram) {
        j["phase_histogram"].push_back({phases, count});
    }
    j["survival"] = nlohmann::ordered_json::array();
    for (const auto& [n, p] : s.survival) j["survival"].push_back({n, p});
    if (s.tail_fit) {
        j["tail_fit"] = {{"c", s.tail_fit->c},
                         {"log_intercept", s.tail_fit->log_intercept},
                         {"points", s.tail_fit->points}};
    } else {
        j["tail_fit"] = nullptr;
    }
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : s.records) {
        j["records"].push_back({{"seed", r.seed},
                                {"status", run_status_name(r.status)},
                                {"phases", r.phases},
                                {"root_iterations", r.root_iterations},
                                {"restarts", r.restarts},
                                {"forest_nodes", r.forest_nodes},
                                {"verified_proper", r.verified_proper},
                                {"verified_accept", r.verified_accept},
                                {"verified_acyclic", r.verified_acyclic}});
    }
    return j.dump(2);
}

}  // namespace acx
