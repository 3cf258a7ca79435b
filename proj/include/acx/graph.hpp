#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "acx/errors.hpp"

namespace acx {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph, immutable once built.
///
/// Edges are stored sorted by endpoint pair, so the edge id order coincides
/// with the lexicographic order on (u, v) that the coloring algorithms use
/// whenever they need "the least edge".
class Graph {
  public:
    Graph() = default;

    /// Endpoints must lie in [0, vertex_count). Rejects self loops and
    /// duplicate edges.
    static Graph build(int vertex_count, std::span<const std::pair<int, int>> pairs);

    /// Accepts arbitrary nonnegative vertex ids and renumbers them densely
    /// to 0..l-1, preserving the numeric order of the original ids (so a
    /// graph that already uses 0..l-1 round-trips unchanged).
    static Graph from_pairs(std::span<const std::pair<int, int>> pairs);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int max_degree() const { return max_degree_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    int degree(int u) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(u)].size()); }
    /// Neighbors of u in ascending order.
    const std::vector<int>& neighbors(int u) const { return adjacency_[static_cast<std::size_t>(u)]; }
    /// (neighbor, edge id) pairs of u, sorted by neighbor.
    const std::vector<std::pair<int, int>>& incident(int u) const {
        return incident_[static_cast<std::size_t>(u)];
    }

    std::optional<int> edge_id(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_id(u, v).has_value(); }

  private:
    int vertex_count_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<std::pair<int, int>>> incident_;
};

/// Simple cycle held in canonical form: the vertex sequence starts at the
/// cycle's minimum vertex and continues toward the smaller of that vertex's
/// two cycle neighbors. Canonicalization pins one traversal direction (the
/// positive traversal), which the recoloring scopes depend on.
class CycleRef {
  public:
    CycleRef() = default;

    /// Validates (>= 3 distinct vertices, consecutive ones adjacent, closing
    /// edge present) and canonicalizes.
    static CycleRef from_vertices(const Graph& g, std::vector<int> vertices);

    /// Canonical rotation/reflection of a raw cyclic vertex sequence.
    static std::vector<int> canonicalize(std::vector<int> vertices);

    int length() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    bool contains_vertex(int u) const;

    /// Edge ids in positive-traversal order; entry i joins vertex i to i+1
    /// (wrapping at the end).
    std::vector<int> edge_ids(const Graph& g) const;

    friend bool operator==(const CycleRef&, const CycleRef&) = default;
    /// Total order: shorter first, then lexicographic on the canonical sequence.
    friend bool operator<(const CycleRef& a, const CycleRef& b) {
        if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() < b.vertices_.size();
        return a.vertices_ < b.vertices_;
    }

  private:
    std::vector<int> vertices_;
};

/// Path with five edges (six distinct vertices). The stored order is the
/// traversal from its pivot endpoint; the reverse traversal is a distinct
/// PathRef with the other endpoint as pivot.
struct PathRef {
    std::vector<int> vertices;

    int pivot() const { return vertices.front(); }

    friend bool operator==(const PathRef&, const PathRef&) = default;
    /// Total order: (pivot, lexicographic vertex sequence). The pivot is the
    /// first vertex, so plain lexicographic comparison realizes that.
    friend bool operator<(const PathRef& a, const PathRef& b) { return a.vertices < b.vertices; }
};

/// Validates that `vertices` is a five-edge simple path in g.
PathRef make_five_path(const Graph& g, std::vector<int> vertices);

/// Positive traversal of the cycle's edges starting from the anchor edge.
/// Throws AnchorNotOnCycleError if the anchor does not lie on the cycle.
std::vector<int> cycle_edges_from(const Graph& g, const CycleRef& c, int anchor_edge);

/// The part of the traversal a recoloring redraws: all edges of
/// cycle_edges_from() except the final two.
std::vector<int> cycle_edge_scope(const Graph& g, const CycleRef& c, int anchor_edge);

/// Positive traversal of the cycle's vertices starting from the anchor vertex.
std::vector<int> cycle_vertices_from(const CycleRef& c, int anchor_vertex);

/// All vertices of cycle_vertices_from() except the final two.
std::vector<int> cycle_vertex_scope(const CycleRef& c, int anchor_vertex);

/// First four vertices of the path, counted from the pivot.
std::vector<int> path_vertex_scope(const PathRef& p);

/// True when the cycle has even length and each of its two alternating edge
/// classes is monochromatic (the two class colors may coincide). Defined for
/// arbitrary, possibly improper colorings; independent of traversal start
/// and direction.
bool edge_cycle_badly_colored(const Graph& g, std::span<const int> edge_colors, const CycleRef& c);

/// Least badly colored cycle of even length >= 6 through `edge`, under the
/// (length, canonical sequence) cycle order; nullopt when there is none.
///
/// Exhaustive search: any such cycle alternates between the anchor's color a
/// and one other color b, so for each candidate b present at both endpoints
/// a depth-first walk over the {a, b}-colored subgraph (tracking visited
/// vertices) enumerates every qualifying cycle through the anchor.
std::optional<CycleRef> find_least_bad_edge_cycle(const Graph& g, std::span<const int> edge_colors,
                                                  int edge);

/// Every 4-cycle containing u, each once in canonical form, grouped by
/// opposite vertex (ascending), pairs of side vertices in ascending order.
std::vector<CycleRef> four_cycles_through(const Graph& g, int u);

/// Every five-edge simple path starting at u, in lexicographic order of the
/// vertex sequence.
std::vector<PathRef> five_paths_from(const Graph& g, int u);

}  // namespace acx
