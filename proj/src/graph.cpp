#include "acx/graph.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <string>

namespace acx {

namespace {

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Graph Graph::build(int vertex_count, std::span<const std::pair<int, int>> pairs) {
    if (vertex_count < 0) throw InvalidParamsError("vertex count must be nonnegative");
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) throw SelfLoopError("self loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw InvalidParamsError("edge endpoint out of range: " + pair_str(a, b));
        es.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(es.begin(), es.end());
    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i] == es[i - 1])
            throw DuplicateEdgeError("duplicate edge " + pair_str(es[i].u, es[i].v));

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(es);
    g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
    g.incident_.resize(static_cast<std::size_t>(vertex_count));
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[static_cast<std::size_t>(id)];
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        g.incident_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        g.incident_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    for (int u = 0; u < vertex_count; ++u) {
        std::sort(g.adjacency_[static_cast<std::size_t>(u)].begin(),
                  g.adjacency_[static_cast<std::size_t>(u)].end());
        std::sort(g.incident_[static_cast<std::size_t>(u)].begin(),
                  g.incident_[static_cast<std::size_t>(u)].end());
        g.max_degree_ = std::max(g.max_degree_, g.degree(u));
    }
    return g;
}

Graph Graph::from_pairs(std::span<const std::pair<int, int>> pairs) {
    std::vector<int> ids;
    ids.reserve(pairs.size() * 2);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0) throw InvalidParamsError("vertex ids must be nonnegative");
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::map<int, int> rank;
    for (std::size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> dense;
    dense.reserve(pairs.size());
    for (const auto& [a, b] : pairs) dense.emplace_back(rank[a], rank[b]);
    return build(static_cast<int>(ids.size()), dense);
}

std::optional<int> Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_ || u == v) return std::nullopt;
    const auto& inc = incident_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(inc.begin(), inc.end(), std::pair<int, int>{v, INT_MIN});
    if (it != inc.end() && it->first == v) return it->second;
    return std::nullopt;
}

std::vector<int> CycleRef::canonicalize(std::vector<int> vertices) {
    const int n = static_cast<int>(vertices.size());
    int mi = 0;
    for (int i = 1; i < n; ++i)
        if (vertices[static_cast<std::size_t>(i)] < vertices[static_cast<std::size_t>(mi)]) mi = i;
    const int nxt = vertices[static_cast<std::size_t>((mi + 1) % n)];
    const int prv = vertices[static_cast<std::size_t>((mi - 1 + n) % n)];
    std::vector<int> out(static_cast<std::size_t>(n));
    if (nxt < prv) {
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = vertices[static_cast<std::size_t>((mi + j) % n)];
    } else {
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = vertices[static_cast<std::size_t>((mi - j + n) % n)];
    }
    return out;
}

CycleRef CycleRef::from_vertices(const Graph& g, std::vector<int> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw InvalidParamsError("cycle needs at least 3 vertices");
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidParamsError("cycle vertices must be distinct");
    for (int i = 0; i < n; ++i) {
        const int a = vertices[static_cast<std::size_t>(i)];
        const int b = vertices[static_cast<std::size_t>((i + 1) % n)];
        if (!g.adjacent(a, b))
            throw InvalidParamsError("cycle step " + pair_str(a, b) + " is not an edge");
    }
    CycleRef c;
    c.vertices_ = canonicalize(std::move(vertices));
    return c;
}

bool CycleRef::contains_vertex(int u) const {
    return std::find(vertices_.begin(), vertices_.end(), u) != vertices_.end();
}

std::vector<int> CycleRef::edge_ids(const Graph& g) const {
    const int n = length();
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto id = g.edge_id(vertices_[static_cast<std::size_t>(i)], vertices_[static_cast<std::size_t>((i + 1) % n)]);
        if (!id) throw InvalidParamsError("cycle references a missing edge");
        ids[static_cast<std::size_t>(i)] = *id;
    }
    return ids;
}

PathRef make_five_path(const Graph& g, std::vector<int> vertices) {
    if (vertices.size() != 6) throw InvalidParamsError("a five-edge path has six vertices");
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidParamsError("path vertices must be distinct");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!g.adjacent(vertices[i], vertices[i + 1]))
            throw InvalidParamsError("path step " + pair_str(vertices[i], vertices[i + 1]) +
                                     " is not an edge");
    return PathRef{std::move(vertices)};
}

std::vector<int> cycle_edges_from(const Graph& g, const CycleRef& c, int anchor_edge) {
    std::vector<int> ids = c.edge_ids(g);
    auto it = std::find(ids.begin(), ids.end(), anchor_edge);
    if (it == ids.end())
        throw AnchorNotOnCycleError("edge " + std::to_string(anchor_edge) + " is not on the cycle");
    std::rotate(ids.begin(), it, ids.end());
    return ids;
}

std::vector<int> cycle_edge_scope(const Graph& g, const CycleRef& c, int anchor_edge) {
    std::vector<int> ids = cycle_edges_from(g, c, anchor_edge);
    ids.resize(ids.size() - 2);
    return ids;
}

std::vector<int> cycle_vertices_from(const CycleRef& c, int anchor_vertex) {
    std::vector<int> vs = c.vertices();
    auto it = std::find(vs.begin(), vs.end(), anchor_vertex);
    if (it == vs.end())
        throw AnchorNotOnCycleError("vertex " + std::to_string(anchor_vertex) +
                                    " is not on the cycle");
    std::rotate(vs.begin(), it, vs.end());
    return vs;
}

std::vector<int> cycle_vertex_scope(const CycleRef& c, int anchor_vertex) {
    std::vector<int> vs = cycle_vertices_from(c, anchor_vertex);
    vs.resize(vs.size() - 2);
    return vs;
}

std::vector<int> path_vertex_scope(const PathRef& p) {
    return {p.vertices.begin(), p.vertices.begin() + 4};
}

bool edge_cycle_badly_colored(const Graph& g, std::span<const int> edge_colors, const CycleRef& c) {
    if (c.length() % 2 != 0) return false;
    const std::vector<int> ids = c.edge_ids(g);
    const int a = edge_colors[static_cast<std::size_t>(ids[0])];
    const int b = edge_colors[static_cast<std::size_t>(ids[1])];
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (edge_colors[static_cast<std::size_t>(ids[i])] != (i % 2 ? b : a)) return false;
    return true;
}

namespace {

/// Depth-first enumeration of badly colored even cycles through one edge,
/// with the odd traversal positions colored `a` and the even ones `b`.
struct BadCycleSearch {
    const Graph& g;
    std::span<const int> colors;
    int start_u;  // anchor endpoint the cycle must close back into
    int a;
    int b;
    std::vector<char> visited;
    std::vector<int> path;  // vertices so far, path[0] == start_u
    int best_len;           // cycles longer than this cannot beat the current best
    std::vector<int>* best_seq;
    bool* found;

    void extend() {
        const int w = path.back();
        // Position of the next edge along the cycle; odd positions carry the
        // anchor color, even positions the candidate color.
        const int next_pos = static_cast<int>(path.size());
        const int want = (next_pos % 2 == 1) ? a : b;
        for (const auto& [x, eid] : g.incident(w)) {
            if (colors[static_cast<std::size_t>(eid)] != want) continue;
            if (x == start_u) {
                if (next_pos >= 6 && next_pos % 2 == 0 && next_pos <= best_len) record();
                continue;
            }
            if (visited[static_cast<std::size_t>(x)]) continue;
            if (static_cast<int>(path.size()) >= best_len) continue;  // closing later would exceed best
            visited[static_cast<std::size_t>(x)] = 1;
            path.push_back(x);
            extend();
            path.pop_back();
            visited[static_cast<std::size_t>(x)] = 0;
        }
    }

    void record() {
        std::vector<int> canon = CycleRef::canonicalize(path);
        const int len = static_cast<int>(path.size());
        if (!*found || len < best_len || (len == best_len && canon < *best_seq)) {
            *found = true;
            best_len = len;
            *best_seq = std::move(canon);
        }
    }
};

}  // namespace

std::optional<CycleRef> find_least_bad_edge_cycle(const Graph& g, std::span<const int> edge_colors,
                                                  int edge) {
    const Edge& e = g.edge(edge);
    const int a = edge_colors[static_cast<std::size_t>(edge)];

    // The cycle's other alternating class is monochromatic in some color b
    // that must appear on a non-anchor edge at both endpoints.
    auto side_colors = [&](int u) {
        std::vector<int> cs;
        for (const auto& [x, eid] : g.incident(u)) {
            (void)x;
            if (eid != edge) cs.push_back(edge_colors[static_cast<std::size_t>(eid)]);
        }
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return cs;
    };
    const std::vector<int> cu = side_colors(e.u);
    const std::vector<int> cv = side_colors(e.v);
    std::vector<int> candidates;
    std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                          std::back_inserter(candidates));

    bool found = false;
    std::vector<int> best_seq;
    int best_len = g.vertex_count();  // no simple cycle can be longer
    for (int b : candidates) {
        BadCycleSearch search{g, edge_colors, e.u, a, b, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0),
                              {e.u, e.v}, best_len, &best_seq, &found};
        search.visited[static_cast<std::size_t>(e.u)] = 1;
        search.visited[static_cast<std::size_t>(e.v)] = 1;
        search.extend();
        best_len = search.best_len;
    }
    if (!found) return std::nullopt;
    CycleRef c;
    // best_seq is already canonical and was validated implicitly by the walk.
    return CycleRef::from_vertices(g, std::move(best_seq));
}

std::vector<CycleRef> four_cycles_through(const Graph& g, int u) {
    // Opposite vertex v shares >= 2 neighbors with u; each unordered pair of
    // shared neighbors closes one 4-cycle u-x-v-y.
    std::vector<std::vector<int>> shared(static_cast<std::size_t>(g.vertex_count()));
    std::vector<int> opposites;
    for (int w : g.neighbors(u)) {
        for (int v : g.neighbors(w)) {
            if (v == u) continue;
            if (shared[static_cast<std::size_t>(v)].empty()) opposites.push_back(v);
            shared[static_cast<std::size_t>(v)].push_back(w);
        }
    }
    std::sort(opposites.begin(), opposites.end());
    std::vector<CycleRef> out;
    for (int v : opposites) {
        const auto& ws = shared[static_cast<std::size_t>(v)];  // ascending: neighbors scanned in order
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j)
                out.push_back(CycleRef::from_vertices(g, {u, ws[i], v, ws[j]}));
    }
    return out;
}

namespace {

void extend_path(const Graph& g, std::vector<int>& path, std::vector<char>& visited,
                 std::vector<PathRef>& out) {
    if (path.size() == 6) {
        out.push_back(PathRef{path});
        return;
    }
    for (int x : g.neighbors(path.back())) {
        if (visited[static_cast<std::size_t>(x)]) continue;
        visited[static_cast<std::size_t>(x)] = 1;
        path.push_back(x);
        extend_path(g, path, visited, out);
        path.pop_back();
        visited[static_cast<std::size_t>(x)] = 0;
    }
}

}  // namespace

std::vector<PathRef> five_paths_from(const Graph& g, int u) {
    std::vector<PathRef> out;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> path{u};
    visited[static_cast<std::size_t>(u)] = 1;
    extend_path(g, path, visited, out);
    return out;
}

}  // namespace acx
