#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acx/coloring.hpp"
#include "acx/graph.hpp"
#include "acx/vertex_color.hpp"

namespace acx {

/// Outcome of a coloring check. When the property fails, `witness_kind`
/// names the violated requirement and `witness` pins down one concrete
/// violation (see each check for its encoding).
struct Verdict {
    bool ok = true;
    std::string witness_kind;  // empty on success
    std::vector<int> witness;
};

/// Colors lie in 1..palette and edges sharing an endpoint differ.
/// Failure kinds: "color_out_of_range" {edge id};
/// "adjacent_edges_share_color" {shared vertex, edge id, edge id}.
Verdict is_proper_edge(const Graph& g, const EdgeColoring& c);

/// Colors lie in 1..palette and adjacent vertices differ.
/// Failure kinds: "color_out_of_range" {vertex};
/// "adjacent_vertices_share_color" {u, v}.
Verdict is_proper_vertex(const Graph& g, const VertexColoring& c);

/// Proper, and no cycle's edges use only two colors.
/// Extra failure kind: "bichromatic_cycle" {cycle vertex sequence}.
Verdict is_acyclic_edge(const Graph& g, const EdgeColoring& c);

/// Proper, and no cycle's vertices use only two colors.
/// Extra failure kind: "bichromatic_cycle" {cycle vertex sequence}.
Verdict is_acyclic_vertex(const Graph& g, const VertexColoring& c);

/// Proper, and no 4-cycle alternates two edge colors. This is the edge
/// accept condition: a completed resampling pass already rules out badly
/// colored cycles of length >= 6, so passing this check makes the coloring
/// acyclic outright.
/// Extra failure kind: "bichromatic_four_cycle" {cycle vertex sequence}.
Verdict is_strongly_proper(const Graph& g, const EdgeColoring& c);

/// Proper, and every distinguished second-neighborhood pair gets two
/// colors. The vertex accept condition: a completed pass leaves no badly
/// colored family member, and any bichromatic cycle would contain one or a
/// monochromatic special pair, so passing this check implies acyclicity.
/// Extra failure kind: "special_pair_shares_color" {u, v} with v in S(u).
Verdict is_specially_proper(const Graph& g, const SpecialPairsIndex& idx, const VertexColoring& c);

/// Greedy edge coloring in edge id order, avoiding the colors of touching
/// edges plus any color that would complete an alternating 4-cycle. Needs
/// at most 2 * max_degree - 1 colors and satisfies is_strongly_proper.
EdgeColoring greedy_strongly_proper(const Graph& g);

/// Greedy vertex coloring in vertex id order, avoiding colored neighbors
/// and both directions of the special-pair relation; the result satisfies
/// is_specially_proper.
VertexColoring greedy_specially_proper(const Graph& g, const SpecialPairsIndex& idx);

enum class ColoringMode { edge, vertex };

/// Smallest palette size <= max_colors admitting a proper acyclic coloring,
/// found by exhaustive search with symmetry pruning; nullopt when even
/// max_colors colors do not suffice. Refuses graphs with more than 12
/// colorable elements.
std::optional<int> brute_force_min_acyclic(const Graph& g, ColoringMode mode, int max_colors);

}  // namespace acx
