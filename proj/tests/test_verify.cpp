#include <algorithm>
#include <vector>

#include "acx/generate.hpp"
#include "acx/verify.hpp"
#include "doctest.h"

using namespace acx;

namespace {

int colors_used(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
}

// The alternating two-coloring of an even cycle, written by edge id.
EdgeColoring alternating(const Graph& g, const CycleRef& c) {
    EdgeColoring out;
    out.palette = 2;
    out.color.assign(static_cast<std::size_t>(g.edge_count()), 0);
    auto ids = c.edge_ids(g);
    for (std::size_t i = 0; i < ids.size(); ++i)
        out.color[static_cast<std::size_t>(ids[i])] = 1 + static_cast<int>(i % 2);
    return out;
}

}  // namespace

TEST_CASE("edge properness catches shared endpoints and range violations") {
    auto g = complete_graph(4);
    auto c = greedy_strongly_proper(g);
    REQUIRE(is_proper_edge(g, c).ok);

    auto shared = c;
    // force the two edges at vertex 0 toward 1 and 2 to collide
    shared.color[static_cast<std::size_t>(*g.edge_id(0, 2))] =
        shared.color[static_cast<std::size_t>(*g.edge_id(0, 1))];
    auto v = is_proper_edge(g, shared);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness_kind == "adjacent_edges_share_color");
    REQUIRE(v.witness.size() == 3);
    const auto& ea = g.edge(v.witness[1]);
    const auto& eb = g.edge(v.witness[2]);
    CHECK(shared.color[static_cast<std::size_t>(v.witness[1])] ==
          shared.color[static_cast<std::size_t>(v.witness[2])]);
    CHECK((ea.u == v.witness[0] || ea.v == v.witness[0]));
    CHECK((eb.u == v.witness[0] || eb.v == v.witness[0]));

    auto range = c;
    range.color[2] = range.palette + 1;
    auto vr = is_proper_edge(g, range);
    REQUIRE_FALSE(vr.ok);
    CHECK(vr.witness_kind == "color_out_of_range");
    CHECK(vr.witness == std::vector<int>{2});
}

TEST_CASE("vertex properness catches adjacent collisions") {
    auto g = cycle_graph(5);
    VertexColoring c{3, {1, 2, 1, 2, 3}};
    CHECK(is_proper_vertex(g, c).ok);
    VertexColoring bad{3, {1, 1, 2, 1, 2}};
    auto v = is_proper_vertex(g, bad);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness_kind == "adjacent_vertices_share_color");
    CHECK(v.witness == std::vector<int>{0, 1});

    VertexColoring range{3, {1, 2, 0, 2, 3}};
    CHECK(is_proper_vertex(g, range).witness_kind == "color_out_of_range");
}

TEST_CASE("edge acyclicity rejects two-colored cycles and names one") {
    auto g = cycle_graph(4);
    auto c4 = CycleRef::from_vertices(g, {0, 1, 2, 3});
    auto two = alternating(g, c4);
    REQUIRE(is_proper_edge(g, two).ok);
    auto v = is_acyclic_edge(g, two);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness_kind == "bichromatic_cycle");
    // the witness is a genuine cycle using at most two edge colors
    auto witness_cycle = CycleRef::from_vertices(g, v.witness);
    std::vector<int> seen;
    for (int e : witness_cycle.edge_ids(g)) seen.push_back(two.color[static_cast<std::size_t>(e)]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(seen.size() <= 2);

    EdgeColoring three{3, {1, 3, 2, 1}};  // traversal colors 1,2,1,3
    CHECK(is_proper_edge(g, three).ok);
    CHECK(is_acyclic_edge(g, three).ok);
    CHECK(is_strongly_proper(g, three).ok);
}

TEST_CASE("strong properness is exactly properness plus four-cycle alternation") {
    auto c4 = cycle_graph(4);
    auto two = alternating(c4, CycleRef::from_vertices(c4, {0, 1, 2, 3}));
    auto v = is_strongly_proper(c4, two);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness_kind == "bichromatic_four_cycle");

    // an alternating six-cycle has no four-cycle to object to, so it is
    // strongly proper yet still bichromatic
    auto c6 = cycle_graph(6);
    auto two6 = alternating(c6, CycleRef::from_vertices(c6, {0, 1, 2, 3, 4, 5}));
    CHECK(is_strongly_proper(c6, two6).ok);
    CHECK_FALSE(is_acyclic_edge(c6, two6).ok);
}

TEST_CASE("vertex acyclicity rejects two-colored cycles") {
    auto g = cycle_graph(6);
    VertexColoring two{2, {1, 2, 1, 2, 1, 2}};
    REQUIRE(is_proper_vertex(g, two).ok);
    auto v = is_acyclic_vertex(g, two);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness_kind == "bichromatic_cycle");
    CHECK(CycleRef::from_vertices(g, v.witness).length() == 6);

    VertexColoring three{3, {1, 2, 1, 2, 1, 3}};
    CHECK(is_proper_vertex(g, three).ok);
    CHECK(is_acyclic_vertex(g, three).ok);
}

TEST_CASE("special properness separates every distinguished pair") {
    auto g = cycle_graph(5);
    auto idx = SpecialPairsIndex::build(g, 1.0);
    REQUIRE(idx.special_of(0) == std::vector<int>{2, 3});
    VertexColoring c{3, {1, 2, 1, 2, 3}};
    REQUIRE(is_proper_vertex(g, c).ok);
    auto v = is_specially_proper(g, idx, c);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness_kind == "special_pair_shares_color");
    REQUIRE(v.witness.size() == 2);
    CHECK(idx.is_special(v.witness[0], v.witness[1]));
    CHECK(c.color[static_cast<std::size_t>(v.witness[0])] ==
          c.color[static_cast<std::size_t>(v.witness[1])]);

    VertexColoring rainbow{5, {1, 2, 3, 4, 5}};
    CHECK(is_specially_proper(g, idx, rainbow).ok);
}

TEST_CASE("greedy edge coloring is strongly proper within the guaranteed palette") {
    for (const auto& g : {cycle_graph(6), complete_graph(4), complete_graph(5),
                          complete_bipartite(3, 3), hypercube_graph(3), path_graph(6),
                          gnp_graph(12, 0.3, 5), gnp_graph(12, 0.5, 6)}) {
        auto c = greedy_strongly_proper(g);
        CHECK(is_strongly_proper(g, c).ok);
        CHECK(colors_used(c.color) <= std::max(1, 2 * g.max_degree() - 1));
        CHECK(c.palette <= std::max(1, 2 * g.max_degree() - 1));
    }
}

TEST_CASE("greedy vertex coloring separates neighbors and distinguished pairs") {
    for (double alpha : {0.5, 1.0}) {
        for (const auto& g : {cycle_graph(6), complete_graph(4), complete_bipartite(3, 3),
                              hypercube_graph(3), gnp_graph(12, 0.3, 7)}) {
            auto idx = SpecialPairsIndex::build(g, alpha);
            auto c = greedy_specially_proper(g, idx);
            CHECK(is_specially_proper(g, idx, c).ok);
        }
    }
}

TEST_CASE("exhaustive minimum acyclic palettes on hand-checked graphs") {
    CHECK(brute_force_min_acyclic(cycle_graph(4), ColoringMode::edge, 6) == 3);
    CHECK(brute_force_min_acyclic(cycle_graph(6), ColoringMode::edge, 6) == 3);
    CHECK(brute_force_min_acyclic(complete_graph(4), ColoringMode::edge, 7) == 5);
    CHECK(brute_force_min_acyclic(complete_bipartite(2, 3), ColoringMode::edge, 6) == 3);
    CHECK(brute_force_min_acyclic(path_graph(6), ColoringMode::edge, 4) == 2);

    CHECK(brute_force_min_acyclic(cycle_graph(4), ColoringMode::vertex, 5) == 3);
    CHECK(brute_force_min_acyclic(cycle_graph(5), ColoringMode::vertex, 5) == 3);
    CHECK(brute_force_min_acyclic(cycle_graph(6), ColoringMode::vertex, 5) == 3);
    CHECK(brute_force_min_acyclic(complete_graph(4), ColoringMode::vertex, 6) == 4);
    CHECK(brute_force_min_acyclic(path_graph(6), ColoringMode::vertex, 4) == 2);
}

TEST_CASE("exhaustive search reports unreachable budgets as empty") {
    CHECK(brute_force_min_acyclic(cycle_graph(4), ColoringMode::edge, 2) == std::nullopt);
    CHECK(brute_force_min_acyclic(complete_graph(4), ColoringMode::edge, 4) == std::nullopt);
    CHECK(brute_force_min_acyclic(complete_graph(4), ColoringMode::vertex, 3) == std::nullopt);
}

TEST_CASE("exhaustive search refuses oversized instances") {
    CHECK_THROWS_AS(brute_force_min_acyclic(cycle_graph(13), ColoringMode::edge, 3),
                    RefuseTooLargeError);
    CHECK_THROWS_AS(brute_force_min_acyclic(cycle_graph(13), ColoringMode::vertex, 3),
                    RefuseTooLargeError);
    CHECK(brute_force_min_acyclic(cycle_graph(12), ColoringMode::edge, 4) == 3);
}
