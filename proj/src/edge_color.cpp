#include "acx/edge_color.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <set>

#include "acx/verify.hpp"

namespace acx {

const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::phase_limit: return "phase_limit";
        case RunStatus::restart_limit: return "restart_limit";
    }
    return "unknown";
}

EdgeColoring random_edge_coloring(const Graph& g, int palette, RandomStream& stream) {
    if (palette < 1) throw InvalidParamsError("palette size must be at least 1");
    if (stream.palette_size() != palette)
        throw InvalidParamsError("stream palette does not match requested palette");
    EdgeColoring c;
    c.palette = palette;
    c.color.resize(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) c.color[static_cast<std::size_t>(e)] = stream.next_color();
    return c;
}

namespace {

/// Least anchor edge (by id) among `scan` that lies on a badly colored even
/// cycle of length >= 6, with its least such cycle. `scan` must be ascending.
std::optional<EdgeLabel> least_bad_over(const Graph& g, std::span<const int> colors,
                                        std::span<const int> scan) {
    for (int e : scan) {
        if (auto c = find_least_bad_edge_cycle(g, colors, e)) return EdgeLabel{e, std::move(*c)};
    }
    return std::nullopt;
}

std::vector<int> clean_edge_set(const Graph& g, std::span<const int> colors) {
    std::vector<int> clean;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!find_least_bad_edge_cycle(g, colors, e)) clean.push_back(e);
    return clean;
}

struct Frame {
    int anchor;
    std::vector<int> scope_sorted;
    std::vector<int> clean_at_entry;  // only populated when checking progression
};

}  // namespace

EdgeColorResult edge_color(const Graph& g, int palette, RandomStream& stream,
                           const EdgeColorOptions& options) {
    EdgeColorResult res;
    res.report.seed = stream.seed();
    res.report.palette_below_guarantee = palette < 2 * g.max_degree() - 1;
    res.coloring = random_edge_coloring(g, palette, stream);
    auto& colors = res.coloring.color;

    std::vector<int> all_edges(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) all_edges[static_cast<std::size_t>(e)] = e;

    std::vector<Frame> stack;
    const auto enter_phase = [&](EdgeLabel label) {
        Frame fr;
        fr.anchor = label.edge;
        if (options.check_progression) fr.clean_at_entry = clean_edge_set(g, colors);
        std::vector<int> scope = cycle_edge_scope(g, label.cycle, label.edge);
        fr.scope_sorted = scope;
        std::sort(fr.scope_sorted.begin(), fr.scope_sorted.end());
        res.forest.nodes.push_back({static_cast<int>(stack.size()), std::move(label)});
        for (int eid : scope) colors[static_cast<std::size_t>(eid)] = stream.next_color();
        ++res.report.phases;
        stack.push_back(std::move(fr));
    };

    while (true) {
        std::optional<EdgeLabel> hit;
        if (stack.empty()) {
            hit = least_bad_over(g, colors, all_edges);
            if (!hit) {
                res.report.status = RunStatus::completed;
                return res;
            }
            if (res.report.phases >= options.phase_cap) {
                res.report.status = RunStatus::phase_limit;
                return res;
            }
            ++res.report.root_iterations;
            enter_phase(std::move(*hit));
        } else {
            hit = least_bad_over(g, colors, stack.back().scope_sorted);
            if (!hit) {
                if (options.check_progression) {
                    const Frame& fr = stack.back();
                    if (find_least_bad_edge_cycle(g, colors, fr.anchor))
                        throw BoundViolatedError("phase return left its anchor edge on a bad cycle");
                    for (int e : fr.clean_at_entry)
                        if (find_least_bad_edge_cycle(g, colors, e))
                            throw BoundViolatedError("phase return dirtied a previously clean edge");
                }
                stack.pop_back();
                continue;
            }
            if (res.report.phases >= options.phase_cap) {
                res.report.status = RunStatus::phase_limit;
                return res;
            }
            enter_phase(std::move(*hit));
        }
    }
}

EdgeColorResult main_algorithm_edges(const Graph& g, int palette, RandomStream& stream,
                                     const MainEdgeOptions& options) {
    const EdgeColorOptions pass_options{options.phase_cap, options.check_progression};
    long long restarts = 0;
    while (true) {
        EdgeColorResult res = edge_color(g, palette, stream, pass_options);
        res.report.restarts = restarts;
        if (res.report.status != RunStatus::completed) return res;
        if (is_strongly_proper(g, res.coloring).ok) return res;
        if (restarts >= options.restart_cap) {
            res.report.status = RunStatus::restart_limit;
            return res;
        }
        ++restarts;
    }
}

std::optional<std::string> edge_forest_error(const Graph& g, const EdgeWitnessForest& f) {
    auto parents = forest_parents(f);
    if (!parents) return "depth sequence is not a valid depth-first traversal";
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const EdgeLabel& lab = f.nodes[i].label;
        if (lab.edge < 0 || lab.edge >= g.edge_count())
            return "node " + std::to_string(i) + ": anchor edge id out of range";
        if (lab.cycle.length() < 6 || lab.cycle.length() % 2 != 0)
            return "node " + std::to_string(i) + ": cycle must have even length >= 6";
        const std::vector<int> ids = lab.cycle.edge_ids(g);  // throws if not a cycle of g
        if (std::find(ids.begin(), ids.end(), lab.edge) == ids.end())
            return "node " + std::to_string(i) + ": anchor edge not on its cycle";
    }
    // Distinct anchors among roots and within every sibling group; each
    // child's anchor drawn from its parent's redraw scope.
    std::vector<std::set<int>> group_anchors(f.nodes.size() + 1);  // index 0 = roots
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const int p = (*parents)[i];
        auto& seen = group_anchors[static_cast<std::size_t>(p + 1)];
        if (!seen.insert(f.nodes[i].label.edge).second)
            return "node " + std::to_string(i) + ": anchor repeats among " +
                   (p < 0 ? std::string("roots") : "children of node " + std::to_string(p));
        if (p >= 0) {
            const EdgeLabel& par = f.nodes[static_cast<std::size_t>(p)].label;
            std::vector<int> scope = cycle_edge_scope(g, par.cycle, par.edge);
            if (std::find(scope.begin(), scope.end(), f.nodes[i].label.edge) == scope.end())
                return "node " + std::to_string(i) + ": anchor outside parent scope";
        }
    }
    return std::nullopt;
}

ValidationResult edge_validation(const Graph& g, const EdgeWitnessForest& f, RandomStream& stream) {
    if (auto err = edge_forest_error(g, f)) return {ValidationStatus::infeasible, -1, *err};
    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) colors[static_cast<std::size_t>(e)] = stream.next_color();
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const EdgeLabel& lab = f.nodes[i].label;
        if (!edge_cycle_badly_colored(g, colors, lab.cycle))
            return {ValidationStatus::failure, static_cast<long long>(i + 1),
                    "cycle at step " + std::to_string(i + 1) + " not badly colored"};
        for (int eid : cycle_edge_scope(g, lab.cycle, lab.edge))
            colors[static_cast<std::size_t>(eid)] = stream.next_color();
    }
    return {ValidationStatus::success, -1, ""};
}

double edge_forest_log_weight(const EdgeWitnessForest& f, int max_degree) {
    const double log_palette = std::log(2.0 * max_degree - 1.0);
    double lw = 0.0;
    for (const auto& node : f.nodes) lw -= (node.label.cycle.length() - 2) * log_palette;
    return lw;
}

double edge_forest_weight(const EdgeWitnessForest& f, int max_degree) {
    return std::exp(edge_forest_log_weight(f, max_degree));
}

void write_edge_forest(std::ostream& out, const Graph& g, const EdgeWitnessForest& f) {
    for (const auto& node : f.nodes) {
        const Edge& e = g.edge(node.label.edge);
        out << node.depth << ' ' << e.u << ' ' << e.v;
        for (int v : node.label.cycle.vertices()) out << ' ' << v;
        out << '\n';
    }
}

EdgeWitnessForest read_edge_forest(std::istream& in, const Graph& g) {
    EdgeWitnessForest f;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int depth, u, v;
        if (!(ls >> depth)) continue;  // blank line
        if (!(ls >> u >> v)) throw ParseError("forest line " + std::to_string(line_no) + ": expected anchor endpoints");
        std::vector<int> cyc;
        int x;
        while (ls >> x) cyc.push_back(x);
        auto eid = g.edge_id(u, v);
        if (!eid) throw ParseError("forest line " + std::to_string(line_no) + ": anchor is not an edge");
        try {
            f.nodes.push_back({depth, {*eid, CycleRef::from_vertices(g, std::move(cyc))}});
        } catch (const InvalidParamsError& ex) {
            throw ParseError("forest line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    if (!forest_parents(f)) throw ParseError("forest depth sequence is not a valid depth-first traversal");
    return f;
}

void write_edge_coloring(std::ostream& out, const EdgeColoring& c) {
    for (std::size_t e = 0; e < c.color.size(); ++e) out << e << ' ' << c.color[e] << '\n';
}

EdgeColoring read_edge_coloring(std::istream& in, const Graph& g) {
    EdgeColoring c;
    c.color.assign(static_cast<std::size_t>(g.edge_count()), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long e, col;
        if (!(ls >> e)) continue;
        if (!(ls >> col) || e < 0 || e >= g.edge_count() || col < 1)
            throw ParseError("coloring line " + std::to_string(line_no) + ": bad entry");
        if (c.color[static_cast<std::size_t>(e)] != 0)
            throw ParseError("coloring line " + std::to_string(line_no) + ": duplicate edge index");
        c.color[static_cast<std::size_t>(e)] = static_cast<int>(col);
        c.palette = std::max<int>(c.palette, static_cast<int>(col));
    }
    for (std::size_t e = 0; e < c.color.size(); ++e)
        if (c.color[e] == 0) throw ParseError("coloring is missing edge " + std::to_string(e));
    return c;
}

}  // namespace acx
