#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "acx/coloring.hpp"
#include "acx/edge_color.hpp"  // RunStatus, ValidationResult
#include "acx/forest.hpp"
#include "acx/graph.hpp"
#include "acx/random.hpp"

namespace acx {

/// Exact value of ceil(alpha * delta^(4/3)).
///
/// Computed in extended-precision integers: alpha is decomposed into its
/// exact dyadic mantissa/exponent and the ceiling is resolved by comparing
/// t^3 against alpha^3 * delta^4 exactly, so values like 16.000000000001
/// never round the wrong way.
long long ceil_alpha_delta43(double alpha, long long delta);

/// Per-vertex distinguished second-neighborhood subsets.
///
/// S(u) keeps the min(ceil(alpha * max_degree^(4/3)), |N2(u)|) vertices of
/// N2(u) ranked by shared-neighbor count |N(u) and N(v)| descending, ties
/// broken toward the larger vertex id. Membership is not symmetric.
class SpecialPairsIndex {
  public:
    static SpecialPairsIndex build(const Graph& g, double alpha);

    /// True when v lies in S(u).
    bool is_special(int u, int v) const;
    /// Members of S(u), ascending by vertex id.
    const std::vector<int>& special_of(int u) const { return special_[static_cast<std::size_t>(u)]; }

    double alpha() const { return alpha_; }
    /// ceil(alpha * max_degree^(4/3)) used as the per-vertex cap.
    long long cap() const { return cap_; }

  private:
    double alpha_ = 1.0;
    long long cap_ = 0;
    std::vector<std::vector<int>> special_;  // each ascending
};

/// Palette the vertex pipeline targets by default:
/// ceil(alpha * max_degree^(4/3)) + max_degree + 1.
int default_vertex_palette(const Graph& g, double alpha);

/// One member of the resampling family with a distinguished pivot: either a
/// 4-cycle whose four ordered opposite pairs are all non-special (pivot may
/// be any of its vertices) or a five-edge path (pivot is the stored first
/// endpoint).
struct BadSetRef {
    int pivot = 0;
    std::variant<CycleRef, PathRef> element;

    bool is_cycle() const { return std::holds_alternative<CycleRef>(element); }
    int set_size() const { return is_cycle() ? 4 : 6; }
    /// Traversal starting at the pivot (positive orientation for cycles).
    std::vector<int> traversal() const;
    /// First |B| - 2 vertices of the traversal: what a resampling redraws.
    std::vector<int> scope() const;
    /// Even-position and odd-position vertex classes both monochromatic.
    bool badly_colored(std::span<const int> vertex_colors) const;
};

using VertexWitnessForest = WitnessForest<BadSetRef>;

/// Whether the 4-cycle belongs to the resampling family: every ordered
/// opposite pair (u, v) must have v outside S(u). Excluded cycles always
/// carry a special opposite pair, which an accepted coloring separates, so
/// they can never stay bichromatic in final output.
bool four_cycle_in_family(const CycleRef& c, const SpecialPairsIndex& idx);

/// Per-vertex count of 4-cycles through u whose opposite vertex lies in
/// N2(u) but not in S(u). When enforce_bound is set, checks each count
/// against max_degree^(8/3) / (8 alpha) and throws BoundViolatedError on a
/// violation (the bound holds by construction of the index).
std::vector<long long> bad_four_cycle_counts(const Graph& g, const SpecialPairsIndex& idx,
                                             bool enforce_bound = true);

/// Least badly colored family member with pivot u: 4-cycles (by canonical
/// sequence) precede five-edge paths (by traversal sequence); nullopt when
/// u pivots no badly colored member.
std::optional<BadSetRef> find_least_bad_set(const Graph& g, const SpecialPairsIndex& idx,
                                            std::span<const int> vertex_colors, int u);

struct VertexColorOptions {
    long long phase_cap = 1'000'000;
    bool check_progression = false;
};

struct MainVertexOptions {
    long long phase_cap = 1'000'000;
    long long restart_cap = 10'000;
    bool check_progression = false;
};

struct VertexTrialReport {
    RunStatus status = RunStatus::completed;
    long long phases = 0;
    long long root_iterations = 0;
    long long restarts = 0;
    std::uint64_t seed = 0;
};

struct VertexColorResult {
    VertexColoring coloring;
    VertexWitnessForest forest;
    VertexTrialReport report;
};

/// Fresh uniform coloring of every vertex, drawn in vertex id order.
VertexColoring random_vertex_coloring(const Graph& g, int palette, RandomStream& stream);

/// Resampling pass over the family of non-special 4-cycles and five-edge
/// paths: color all vertices uniformly, then while some vertex pivots a
/// badly colored member, take the least such pivot, its least member, and
/// redraw the member's scope (recursing into the scope before returning).
VertexColorResult vertex_color(const Graph& g, const SpecialPairsIndex& idx, int palette,
                               RandomStream& stream, const VertexColorOptions& options = {});

/// Accept loop around vertex_color: rerun until the coloring separates all
/// neighbors and all special pairs. On success the coloring is additionally
/// free of badly colored family members, hence proper and acyclic.
VertexColorResult main_algorithm_vertices(const Graph& g, const SpecialPairsIndex& idx, int palette,
                                          RandomStream& stream, const MainVertexOptions& options = {});

/// Structural feasibility of a vertex witness forest (distinct pivots among
/// roots and sibling groups; each child's pivot inside its parent's scope;
/// every element a genuine family member pivoted correctly).
std::optional<std::string> vertex_forest_error(const Graph& g, const SpecialPairsIndex& idx,
                                               const VertexWitnessForest& f);

/// Replay of a vertex witness forest against a fresh stream, mirroring
/// edge_validation.
ValidationResult vertex_validation(const Graph& g, const SpecialPairsIndex& idx,
                                   const VertexWitnessForest& f, RandomStream& stream);

/// log of the forest weight with per-node factor q^(|B|-2) where
/// q = 1 / (alpha * max_degree^(4/3)). Empty forest has weight 1.
double vertex_forest_log_weight(const VertexWitnessForest& f, double alpha, int max_degree);

// --- plain-text serialization ------------------------------------------------
// Forest: one node per line, "depth pivot v1 ... vk" where v1..vk is the
// pivot-first traversal (k = 4 for cycles, 6 for paths, so the kind is
// implied). Coloring: one "vertex color" line per vertex. Index: one
// "u: v1 v2 ..." line per vertex.

void write_vertex_forest(std::ostream& out, const VertexWitnessForest& f);
VertexWitnessForest read_vertex_forest(std::istream& in, const Graph& g);

void write_vertex_coloring(std::ostream& out, const VertexColoring& c);
VertexColoring read_vertex_coloring(std::istream& in, const Graph& g);

void write_special_index(std::ostream& out, const Graph& g, const SpecialPairsIndex& idx);

}  // namespace acx
