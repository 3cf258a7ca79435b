#include "acx/vertex_color.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "acx/verify.hpp"

namespace acx {

long long ceil_alpha_delta43(double alpha, long long delta) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw InvalidParamsError("alpha must be positive and finite");
    if (delta < 0) throw InvalidParamsError("degree must be nonnegative");
    if (delta == 0) return 0;

    using boost::multiprecision::cpp_int;
    // alpha = m * 2^s exactly: doubles carry a 53-bit mantissa, so comparing
    // t^3 against alpha^3 * delta^4 in integers gives the exact ceiling of
    // alpha * delta^(4/3) with no rounding at integer boundaries.
    int exp2 = 0;
    const double mant = std::frexp(alpha, &exp2);
    const auto m = static_cast<std::uint64_t>(std::ldexp(mant, 53));
    const int s = exp2 - 53;

    cpp_int rhs = cpp_int(m) * m * m;
    {
        cpp_int d(delta);
        rhs *= d * d * d * d;
    }
    cpp_int lhs_shift = 1;
    if (s >= 0)
        rhs <<= 3 * s;
    else
        lhs_shift <<= -3 * s;

    const auto reaches = [&](long long t) {
        cpp_int t3 = cpp_int(t) * t * t;
        return t3 * lhs_shift >= rhs;
    };
    long long hi = 1;
    while (!reaches(hi)) {
        if (hi > (1LL << 61)) throw InvalidParamsError("ceiling exceeds the supported range");
        hi *= 2;
    }
    long long lo = hi / 2;  // reaches(lo) is false (or lo == 0)
    while (lo + 1 < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (reaches(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

SpecialPairsIndex SpecialPairsIndex::build(const Graph& g, double alpha) {
    SpecialPairsIndex idx;
    idx.alpha_ = alpha;
    idx.cap_ = ceil_alpha_delta43(alpha, g.max_degree());
    const int n = g.vertex_count();
    idx.special_.resize(static_cast<std::size_t>(n));

    std::vector<int> shared(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        std::vector<int> touched;
        for (int w : g.neighbors(u))
            for (int v : g.neighbors(w)) {
                if (v == u) continue;
                if (shared[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
            }
        std::vector<std::pair<int, int>> ranked;  // (shared count, vertex)
        for (int v : touched) {
            if (!g.adjacent(u, v)) ranked.emplace_back(shared[static_cast<std::size_t>(v)], v);
            shared[static_cast<std::size_t>(v)] = 0;
        }
        const std::size_t keep = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(idx.cap_));
        std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end(),
                          [](const auto& a, const auto& b) {
                              if (a.first != b.first) return a.first > b.first;
                              return a.second > b.second;
                          });
        auto& members = idx.special_[static_cast<std::size_t>(u)];
        members.reserve(keep);
        for (std::size_t i = 0; i < keep; ++i) members.push_back(ranked[i].second);
        std::sort(members.begin(), members.end());
    }
    return idx;
}

bool SpecialPairsIndex::is_special(int u, int v) const {
    const auto& s = special_[static_cast<std::size_t>(u)];
    return std::binary_search(s.begin(), s.end(), v);
}

int default_vertex_palette(const Graph& g, double alpha) {
    const long long k = ceil_alpha_delta43(alpha, g.max_degree()) + g.max_degree() + 1;
    if (k > std::numeric_limits<int>::max()) throw InvalidParamsError("palette does not fit in int");
    return static_cast<int>(k);
}

std::vector<int> BadSetRef::traversal() const {
    if (const auto* c = std::get_if<CycleRef>(&element)) return cycle_vertices_from(*c, pivot);
    return std::get<PathRef>(element).vertices;
}

std::vector<int> BadSetRef::scope() const {
    if (const auto* c = std::get_if<CycleRef>(&element)) return cycle_vertex_scope(*c, pivot);
    return path_vertex_scope(std::get<PathRef>(element));
}

bool BadSetRef::badly_colored(std::span<const int> vertex_colors) const {
    const std::vector<int> t = traversal();
    for (std::size_t i = 2; i < t.size(); ++i)
        if (vertex_colors[static_cast<std::size_t>(t[i])] !=
            vertex_colors[static_cast<std::size_t>(t[i - 2])])
            return false;
    return true;
}

bool four_cycle_in_family(const CycleRef& c, const SpecialPairsIndex& idx) {
    if (c.length() != 4) throw InvalidParamsError("family cycles have length 4");
    const std::vector<int>& v = c.vertices();
    return !idx.is_special(v[0], v[2]) && !idx.is_special(v[2], v[0]) &&
           !idx.is_special(v[1], v[3]) && !idx.is_special(v[3], v[1]);
}

std::vector<long long> bad_four_cycle_counts(const Graph& g, const SpecialPairsIndex& idx,
                                             bool enforce_bound) {
    const int n = g.vertex_count();
    std::vector<long long> counts(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (const CycleRef& c : four_cycles_through(g, u)) {
            const std::vector<int>& vs = c.vertices();
            const std::size_t pos = static_cast<std::size_t>(
                std::find(vs.begin(), vs.end(), u) - vs.begin());
            const int v = vs[(pos + 2) % 4];
            if (g.adjacent(u, v)) continue;  // distance 1, not in the second neighborhood
            if (!idx.is_special(u, v)) ++counts[static_cast<std::size_t>(u)];
        }
    if (enforce_bound) {
        const double bound = std::pow(static_cast<double>(g.max_degree()), 8.0 / 3.0) /
                             (8.0 * idx.alpha());
        for (int u = 0; u < n; ++u)
            if (static_cast<double>(counts[static_cast<std::size_t>(u)]) > bound + 1e-9)
                throw BoundViolatedError("vertex " + std::to_string(u) + " lies on " +
                                         std::to_string(counts[static_cast<std::size_t>(u)]) +
                                         " non-special 4-cycles, above the guaranteed cap");
    }
    return counts;
}

std::optional<BadSetRef> find_least_bad_set(const Graph& g, const SpecialPairsIndex& idx,
                                            std::span<const int> vertex_colors, int u) {
    std::optional<CycleRef> best;
    for (const CycleRef& c : four_cycles_through(g, u)) {
        const std::vector<int>& vs = c.vertices();
        if (vertex_colors[static_cast<std::size_t>(vs[0])] != vertex_colors[static_cast<std::size_t>(vs[2])] ||
            vertex_colors[static_cast<std::size_t>(vs[1])] != vertex_colors[static_cast<std::size_t>(vs[3])])
            continue;
        if (!four_cycle_in_family(c, idx)) continue;
        if (!best || c < *best) best = c;
    }
    if (best) return BadSetRef{u, std::move(*best)};

    // No qualifying 4-cycle: first five-edge path from u, in lexicographic
    // order, whose two alternating vertex classes are monochromatic. The
    // color constraints are applied while extending, so the first complete
    // path the search reaches is the least badly colored one.
    std::vector<int> path{u};
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(u)] = 1;
    std::optional<PathRef> found;
    const auto dfs = [&](auto&& self) -> bool {
        if (path.size() == 6) {
            found = PathRef{path};
            return true;
        }
        for (int w : g.neighbors(path.back())) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            if (path.size() >= 2 && vertex_colors[static_cast<std::size_t>(w)] !=
                                        vertex_colors[static_cast<std::size_t>(path[path.size() - 2])])
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (self(self)) return true;
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    dfs(dfs);
    if (found) return BadSetRef{u, std::move(*found)};
    return std::nullopt;
}

VertexColoring random_vertex_coloring(const Graph& g, int palette, RandomStream& stream) {
    if (palette < 1) throw InvalidParamsError("palette size must be at least 1");
    if (stream.palette_size() != palette)
        throw InvalidParamsError("stream palette does not match requested palette");
    VertexColoring c;
    c.palette = palette;
    c.color.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int u = 0; u < g.vertex_count(); ++u) c.color[static_cast<std::size_t>(u)] = stream.next_color();
    return c;
}

namespace {

/// Least pivot among `scan` carrying a badly colored family member, with its
/// least member. `scan` must be ascending.
std::optional<BadSetRef> least_bad_over(const Graph& g, const SpecialPairsIndex& idx,
                                        std::span<const int> colors, std::span<const int> scan) {
    for (int u : scan) {
        if (auto b = find_least_bad_set(g, idx, colors, u)) return b;
    }
    return std::nullopt;
}

std::vector<int> clean_vertex_set(const Graph& g, const SpecialPairsIndex& idx,
                                  std::span<const int> colors) {
    std::vector<int> clean;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!find_least_bad_set(g, idx, colors, u)) clean.push_back(u);
    return clean;
}

struct Frame {
    int pivot;
    std::vector<int> scope_sorted;
    std::vector<int> clean_at_entry;  // only populated when checking progression
};

}  // namespace

VertexColorResult vertex_color(const Graph& g, const SpecialPairsIndex& idx, int palette,
                               RandomStream& stream, const VertexColorOptions& options) {
    VertexColorResult res;
    res.report.seed = stream.seed();
    res.coloring = random_vertex_coloring(g, palette, stream);
    auto& colors = res.coloring.color;

    std::vector<int> all_vertices(static_cast<std::size_t>(g.vertex_count()));
    for (int u = 0; u < g.vertex_count(); ++u) all_vertices[static_cast<std::size_t>(u)] = u;

    std::vector<Frame> stack;
    const auto enter_phase = [&](BadSetRef label) {
        Frame fr;
        fr.pivot = label.pivot;
        if (options.check_progression) fr.clean_at_entry = clean_vertex_set(g, idx, colors);
        std::vector<int> scope = label.scope();
        fr.scope_sorted = scope;
        std::sort(fr.scope_sorted.begin(), fr.scope_sorted.end());
        res.forest.nodes.push_back({static_cast<int>(stack.size()), std::move(label)});
        for (int v : scope) colors[static_cast<std::size_t>(v)] = stream.next_color();
        ++res.report.phases;
        stack.push_back(std::move(fr));
    };

    while (true) {
        std::optional<BadSetRef> hit;
        if (stack.empty()) {
            hit = least_bad_over(g, idx, colors, all_vertices);
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
            hit = least_bad_over(g, idx, colors, stack.back().scope_sorted);
            if (!hit) {
                if (options.check_progression) {
                    const Frame& fr = stack.back();
                    if (find_least_bad_set(g, idx, colors, fr.pivot))
                        throw BoundViolatedError("phase return left its pivot on a bad set");
                    for (int u : fr.clean_at_entry)
                        if (find_least_bad_set(g, idx, colors, u))
                            throw BoundViolatedError("phase return dirtied a previously clean vertex");
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

VertexColorResult main_algorithm_vertices(const Graph& g, const SpecialPairsIndex& idx, int palette,
                                          RandomStream& stream, const MainVertexOptions& options) {
    const VertexColorOptions pass_options{options.phase_cap, options.check_progression};
    long long restarts = 0;
    while (true) {
        VertexColorResult res = vertex_color(g, idx, palette, stream, pass_options);
        res.report.restarts = restarts;
        if (res.report.status != RunStatus::completed) return res;
        if (is_specially_proper(g, idx, res.coloring).ok) return res;
        if (restarts >= options.restart_cap) {
            res.report.status = RunStatus::restart_limit;
            return res;
        }
        ++restarts;
    }
}

std::optional<std::string> vertex_forest_error(const Graph& g, const SpecialPairsIndex& idx,
                                               const VertexWitnessForest& f) {
    auto parents = forest_parents(f);
    if (!parents) return "depth sequence is not a valid depth-first traversal";
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const BadSetRef& lab = f.nodes[i].label;
        if (lab.pivot < 0 || lab.pivot >= g.vertex_count())
            return "node " + std::to_string(i) + ": pivot out of range";
        if (const auto* c = std::get_if<CycleRef>(&lab.element)) {
            if (c->length() != 4) return "node " + std::to_string(i) + ": cycle member must have length 4";
            try {
                c->edge_ids(g);  // throws if not a cycle of g
            } catch (const InvalidParamsError&) {
                return "node " + std::to_string(i) + ": not a cycle of the graph";
            }
            if (!c->contains_vertex(lab.pivot))
                return "node " + std::to_string(i) + ": pivot not on its cycle";
            if (!four_cycle_in_family(*c, idx))
                return "node " + std::to_string(i) + ": 4-cycle carries a special pair";
        } else {
            const PathRef& p = std::get<PathRef>(lab.element);
            try {
                make_five_path(g, p.vertices);
            } catch (const InvalidParamsError&) {
                return "node " + std::to_string(i) + ": not a five-edge path of the graph";
            }
            if (p.pivot() != lab.pivot)
                return "node " + std::to_string(i) + ": pivot is not the path's first vertex";
        }
    }
    // Distinct pivots among roots and within every sibling group; each
    // child's pivot drawn from its parent's redraw scope.
    std::vector<std::set<int>> group_pivots(f.nodes.size() + 1);  // index 0 = roots
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const int p = (*parents)[i];
        auto& seen = group_pivots[static_cast<std::size_t>(p + 1)];
        if (!seen.insert(f.nodes[i].label.pivot).second)
            return "node " + std::to_string(i) + ": pivot repeats among " +
                   (p < 0 ? std::string("roots") : "children of node " + std::to_string(p));
        if (p >= 0) {
            const std::vector<int> scope = f.nodes[static_cast<std::size_t>(p)].label.scope();
            if (std::find(scope.begin(), scope.end(), f.nodes[i].label.pivot) == scope.end())
                return "node " + std::to_string(i) + ": pivot outside parent scope";
        }
    }
    return std::nullopt;
}

ValidationResult vertex_validation(const Graph& g, const SpecialPairsIndex& idx,
                                   const VertexWitnessForest& f, RandomStream& stream) {
    if (auto err = vertex_forest_error(g, idx, f)) return {ValidationStatus::infeasible, -1, *err};
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()));
    for (int u = 0; u < g.vertex_count(); ++u) colors[static_cast<std::size_t>(u)] = stream.next_color();
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const BadSetRef& lab = f.nodes[i].label;
        if (!lab.badly_colored(colors))
            return {ValidationStatus::failure, static_cast<long long>(i + 1),
                    "set at step " + std::to_string(i + 1) + " not badly colored"};
        for (int v : lab.scope()) colors[static_cast<std::size_t>(v)] = stream.next_color();
    }
    return {ValidationStatus::success, -1, ""};
}

double vertex_forest_log_weight(const VertexWitnessForest& f, double alpha, int max_degree) {
    const double log_q = -(std::log(alpha) + (4.0 / 3.0) * std::log(static_cast<double>(max_degree)));
    double lw = 0.0;
    for (const auto& node : f.nodes) lw += (node.label.set_size() - 2) * log_q;
    return lw;
}

void write_vertex_forest(std::ostream& out, const VertexWitnessForest& f) {
    for (const auto& node : f.nodes) {
        out << node.depth << ' ' << node.label.pivot;
        for (int v : node.label.traversal()) out << ' ' << v;
        out << '\n';
    }
}

VertexWitnessForest read_vertex_forest(std::istream& in, const Graph& g) {
    VertexWitnessForest f;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int depth, pivot;
        if (!(ls >> depth)) continue;  // blank line
        if (!(ls >> pivot)) throw ParseError("forest line " + std::to_string(line_no) + ": expected a pivot");
        std::vector<int> vs;
        int x;
        while (ls >> x) vs.push_back(x);
        if (vs.size() != 4 && vs.size() != 6)
            throw ParseError("forest line " + std::to_string(line_no) + ": expected 4 or 6 vertices");
        if (vs.front() != pivot)
            throw ParseError("forest line " + std::to_string(line_no) + ": traversal must start at the pivot");
        try {
            if (vs.size() == 4)
                f.nodes.push_back({depth, BadSetRef{pivot, CycleRef::from_vertices(g, std::move(vs))}});
            else
                f.nodes.push_back({depth, BadSetRef{pivot, make_five_path(g, std::move(vs))}});
        } catch (const InvalidParamsError& ex) {
            throw ParseError("forest line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    if (!forest_parents(f)) throw ParseError("forest depth sequence is not a valid depth-first traversal");
    return f;
}

void write_vertex_coloring(std::ostream& out, const VertexColoring& c) {
    for (std::size_t u = 0; u < c.color.size(); ++u) out << u << ' ' << c.color[u] << '\n';
}

VertexColoring read_vertex_coloring(std::istream& in, const Graph& g) {
    VertexColoring c;
    c.color.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long u, col;
        if (!(ls >> u)) continue;
        if (!(ls >> col) || u < 0 || u >= g.vertex_count() || col < 1)
            throw ParseError("coloring line " + std::to_string(line_no) + ": bad entry");
        if (c.color[static_cast<std::size_t>(u)] != 0)
            throw ParseError("coloring line " + std::to_string(line_no) + ": duplicate vertex");
        c.color[static_cast<std::size_t>(u)] = static_cast<int>(col);
        c.palette = std::max<int>(c.palette, static_cast<int>(col));
    }
    for (std::size_t u = 0; u < c.color.size(); ++u)
        if (c.color[u] == 0) throw ParseError("coloring is missing vertex " + std::to_string(u));
    return c;
}

void write_special_index(std::ostream& out, const Graph& g, const SpecialPairsIndex& idx) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        out << u << ':';
        for (int v : idx.special_of(u)) out << ' ' << v;
        out << '\n';
    }
}

}  // namespace acx
