#include "acx/verify.hpp"

#include <algorithm>
#include <set>

namespace acx {

namespace {

std::vector<int> used_colors(const std::vector<int>& colors) {
    std::vector<int> used = colors;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

/// Some cycle of the subgraph formed by the allowed edges, as a vertex
/// sequence; empty when that subgraph is a forest. Iterative depth-first
/// search; a non-tree edge into the active path closes a cycle.
std::vector<int> subgraph_cycle(const Graph& g, const std::vector<char>& edge_ok) {
    const int n = g.vertex_count();
    std::vector<char> state(static_cast<std::size_t>(n), 0);  // 0 unseen, 1 active, 2 done
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<std::size_t>(s)]) continue;
        state[static_cast<std::size_t>(s)] = 1;
        path.assign(1, s);
        while (!path.empty()) {
            const int x = path.back();
            const auto& inc = g.incident(x);
            bool descended = false;
            while (next[static_cast<std::size_t>(x)] < inc.size()) {
                const auto [w, eid] = inc[next[static_cast<std::size_t>(x)]++];
                if (!edge_ok[static_cast<std::size_t>(eid)]) continue;
                if (w == parent[static_cast<std::size_t>(x)]) continue;  // the unique tree edge upward
                if (state[static_cast<std::size_t>(w)] == 1) {
                    auto it = std::find(path.begin(), path.end(), w);
                    return {it, path.end()};
                }
                if (state[static_cast<std::size_t>(w)] == 0) {
                    state[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = x;
                    path.push_back(w);
                    descended = true;
                    break;
                }
            }
            if (!descended && next[static_cast<std::size_t>(x)] >= inc.size()) {
                state[static_cast<std::size_t>(x)] = 2;
                path.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

Verdict is_proper_edge(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.edge_count())
        throw InvalidParamsError("coloring does not match the graph's edge count");
    for (int e = 0; e < g.edge_count(); ++e) {
        const int col = c.color[static_cast<std::size_t>(e)];
        if (col < 1 || col > c.palette) return {false, "color_out_of_range", {e}};
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<std::pair<int, int>> seen;  // (color, edge id)
        for (const auto& [w, eid] : g.incident(u)) {
            (void)w;
            seen.emplace_back(c.color[static_cast<std::size_t>(eid)], eid);
        }
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 1; i < seen.size(); ++i)
            if (seen[i].first == seen[i - 1].first)
                return {false, "adjacent_edges_share_color", {u, seen[i - 1].second, seen[i].second}};
    }
    return {};
}

Verdict is_proper_vertex(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        throw InvalidParamsError("coloring does not match the graph's vertex count");
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int col = c.color[static_cast<std::size_t>(u)];
        if (col < 1 || col > c.palette) return {false, "color_out_of_range", {u}};
    }
    for (const Edge& e : g.edges())
        if (c.color[static_cast<std::size_t>(e.u)] == c.color[static_cast<std::size_t>(e.v)])
            return {false, "adjacent_vertices_share_color", {e.u, e.v}};
    return {};
}

Verdict is_acyclic_edge(const Graph& g, const EdgeColoring& c) {
    if (Verdict v = is_proper_edge(g, c); !v.ok) return v;
    const std::vector<int> used = used_colors(c.color);
    std::vector<char> edge_ok(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < used.size(); ++i)
        for (std::size_t j = i + 1; j < used.size(); ++j) {
            for (int e = 0; e < g.edge_count(); ++e) {
                const int col = c.color[static_cast<std::size_t>(e)];
                edge_ok[static_cast<std::size_t>(e)] = col == used[i] || col == used[j];
            }
            if (std::vector<int> cyc = subgraph_cycle(g, edge_ok); !cyc.empty())
                return {false, "bichromatic_cycle", std::move(cyc)};
        }
    return {};
}

Verdict is_acyclic_vertex(const Graph& g, const VertexColoring& c) {
    if (Verdict v = is_proper_vertex(g, c); !v.ok) return v;
    const std::vector<int> used = used_colors(c.color);
    std::vector<char> edge_ok(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < used.size(); ++i)
        for (std::size_t j = i + 1; j < used.size(); ++j) {
            for (int e = 0; e < g.edge_count(); ++e) {
                const int cu = c.color[static_cast<std::size_t>(g.edge(e).u)];
                const int cv = c.color[static_cast<std::size_t>(g.edge(e).v)];
                edge_ok[static_cast<std::size_t>(e)] = (cu == used[i] || cu == used[j]) &&
                                                       (cv == used[i] || cv == used[j]);
            }
            if (std::vector<int> cyc = subgraph_cycle(g, edge_ok); !cyc.empty())
                return {false, "bichromatic_cycle", std::move(cyc)};
        }
    return {};
}

Verdict is_strongly_proper(const Graph& g, const EdgeColoring& c) {
    if (Verdict v = is_proper_edge(g, c); !v.ok) return v;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (const CycleRef& cyc : four_cycles_through(g, u)) {
            if (cyc.vertices()[0] != u) continue;  // visit each 4-cycle once, at its minimum vertex
            const std::vector<int> ids = cyc.edge_ids(g);
            if (c.color[static_cast<std::size_t>(ids[0])] == c.color[static_cast<std::size_t>(ids[2])] &&
                c.color[static_cast<std::size_t>(ids[1])] == c.color[static_cast<std::size_t>(ids[3])])
                return {false, "bichromatic_four_cycle", cyc.vertices()};
        }
    return {};
}

Verdict is_specially_proper(const Graph& g, const SpecialPairsIndex& idx, const VertexColoring& c) {
    if (Verdict v = is_proper_vertex(g, c); !v.ok) return v;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : idx.special_of(u))
            if (c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)])
                return {false, "special_pair_shares_color", {u, v}};
    return {};
}

EdgeColoring greedy_strongly_proper(const Graph& g) {
    EdgeColoring c;
    c.color.assign(static_cast<std::size_t>(g.edge_count()), 0);
    int max_used = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        std::set<int> forbidden;
        for (const auto& [x, f] : g.incident(ed.u)) {
            (void)x;
            if (c.color[static_cast<std::size_t>(f)]) forbidden.insert(c.color[static_cast<std::size_t>(f)]);
        }
        for (const auto& [y, f] : g.incident(ed.v)) {
            (void)y;
            if (c.color[static_cast<std::size_t>(f)]) forbidden.insert(c.color[static_cast<std::size_t>(f)]);
        }
        // A 4-cycle u-v-y-x whose side edges (v,y), (u,x) already share a
        // color must not get the color of its closing edge (x,y). Every
        // 4-cycle is completed by its last edge, so this suffices.
        for (const auto& [x, f2] : g.incident(ed.u)) {
            if (x == ed.v || !c.color[static_cast<std::size_t>(f2)]) continue;
            for (const auto& [y, f1] : g.incident(ed.v)) {
                if (y == ed.u || y == x || !c.color[static_cast<std::size_t>(f1)]) continue;
                if (c.color[static_cast<std::size_t>(f1)] != c.color[static_cast<std::size_t>(f2)]) continue;
                if (auto closing = g.edge_id(x, y); closing && c.color[static_cast<std::size_t>(*closing)])
                    forbidden.insert(c.color[static_cast<std::size_t>(*closing)]);
            }
        }
        int col = 1;
        while (forbidden.count(col)) ++col;
        c.color[static_cast<std::size_t>(e)] = col;
        max_used = std::max(max_used, col);
    }
    c.palette = std::max(max_used, 1);
    return c;
}

VertexColoring greedy_specially_proper(const Graph& g, const SpecialPairsIndex& idx) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int v : idx.special_of(x)) rev[static_cast<std::size_t>(v)].push_back(x);
    VertexColoring c;
    c.color.assign(static_cast<std::size_t>(n), 0);
    int max_used = 0;
    for (int u = 0; u < n; ++u) {
        std::set<int> forbidden;
        for (int w : g.neighbors(u))
            if (c.color[static_cast<std::size_t>(w)]) forbidden.insert(c.color[static_cast<std::size_t>(w)]);
        for (int v : idx.special_of(u))
            if (c.color[static_cast<std::size_t>(v)]) forbidden.insert(c.color[static_cast<std::size_t>(v)]);
        for (int x : rev[static_cast<std::size_t>(u)])
            if (c.color[static_cast<std::size_t>(x)]) forbidden.insert(c.color[static_cast<std::size_t>(x)]);
        int col = 1;
        while (forbidden.count(col)) ++col;
        c.color[static_cast<std::size_t>(u)] = col;
        max_used = std::max(max_used, col);
    }
    c.palette = std::max(max_used, 1);
    return c;
}

std::optional<int> brute_force_min_acyclic(const Graph& g, ColoringMode mode, int max_colors) {
    const int count = mode == ColoringMode::edge ? g.edge_count() : g.vertex_count();
    if (count > 12) throw RefuseTooLargeError("exhaustive search is limited to 12 colorable elements");
    if (max_colors < 0) throw InvalidParamsError("max colors must be nonnegative");
    if (count == 0) return 0;

    // Elements before i that must receive a different color.
    std::vector<std::vector<int>> earlier(static_cast<std::size_t>(count));
    if (mode == ColoringMode::edge) {
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j) {
                const Edge& a = g.edge(i);
                const Edge& b = g.edge(j);
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                    earlier[static_cast<std::size_t>(j)].push_back(i);
            }
    } else {
        for (const Edge& e : g.edges()) earlier[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    std::vector<int> colors(static_cast<std::size_t>(count), 0);
    for (int k = 1; k <= max_colors; ++k) {
        const auto search = [&](auto&& self, int i, int used) -> bool {
            if (i == count) {
                if (mode == ColoringMode::edge) return is_acyclic_edge(g, {k, colors}).ok;
                return is_acyclic_vertex(g, {k, colors}).ok;
            }
            // Colors past used+1 are interchangeable with used+1: skip them.
            const int top = std::min(k, used + 1);
            for (int col = 1; col <= top; ++col) {
                bool clash = false;
                for (int j : earlier[static_cast<std::size_t>(i)])
                    if (colors[static_cast<std::size_t>(j)] == col) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                colors[static_cast<std::size_t>(i)] = col;
                if (self(self, i + 1, std::max(used, col))) return true;
            }
            colors[static_cast<std::size_t>(i)] = 0;
            return false;
        };
        if (search(search, 0, 0)) return k;
    }
    return std::nullopt;
}

}  // namespace acx
