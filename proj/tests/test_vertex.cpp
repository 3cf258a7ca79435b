#include <cmath>
#include <sstream>
#include <vector>

#include "acx/generate.hpp"
#include "acx/verify.hpp"
#include "acx/vertex_color.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace acx;

namespace {

// Four-cycle 0-1-2-3 plus, per cycle vertex x, three pendant vertices
// adjacent to both x and a private hub. Each hub shares three neighbors with
// its cycle vertex, so at a cap of one slot the hub crowds the cycle
// diagonal out of the distinguished set and the central cycle stays in the
// resampling family.
Graph booster_gadget() {
    std::vector<std::pair<int, int>> p = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const int hubs[4] = {4, 8, 12, 16};
    for (int x = 0; x < 4; ++x) {
        for (int j = 1; j <= 3; ++j) {
            p.push_back({x, hubs[x] + j});
            p.push_back({hubs[x] + j, hubs[x]});
        }
    }
    return Graph::build(20, p);
}

// 0 reaches 5 through two common neighbors (3 and 4) and 2 through one (1),
// so with one distinguished slot 0 keeps 5 and drops 2, while 2 keeps 0.
Graph asymmetry_gadget() {
    std::vector<std::pair<int, int>> p = {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {3, 5}, {4, 5}};
    return Graph::build(6, p);
}

std::vector<int> random_colors(int count, int palette, std::uint64_t seed) {
    RandomStream s(seed, palette);
    std::vector<int> out(static_cast<std::size_t>(count));
    for (auto& c : out) c = s.next_color();
    return out;
}

std::string forest_text(const VertexWitnessForest& f) {
    std::ostringstream os;
    write_vertex_forest(os, f);
    return os.str();
}

bool no_bad_member_remains(const Graph& g, const SpecialPairsIndex& idx, const VertexColoring& c) {
    for (int u = 0; u < g.vertex_count(); ++u)
        if (find_least_bad_set(g, idx, c.color, u)) return false;
    return true;
}

}  // namespace

TEST_CASE("palette cap ceiling is exact for doubles near integer boundaries") {
    CHECK(ceil_alpha_delta43(1.0, 8) == 16);
    CHECK(ceil_alpha_delta43(0.1, 5) == 1);
    CHECK(ceil_alpha_delta43(1.0, 2) == 3);
    CHECK(ceil_alpha_delta43(1.0, 10) == 22);
    CHECK(ceil_alpha_delta43(0.2, 3) == 1);
    CHECK(ceil_alpha_delta43(0.3, 9) == 6);
    CHECK(ceil_alpha_delta43(2.5, 7) == 34);
    CHECK(ceil_alpha_delta43(0.62996, 1000) == 6300);
    CHECK(ceil_alpha_delta43(1.0, 1) == 1);
    // exact hits must not round up
    CHECK(ceil_alpha_delta43(0.5, 8) == 8);
    CHECK(ceil_alpha_delta43(0.25, 8) == 4);
    CHECK(ceil_alpha_delta43(3.0, 27) == 243);
    CHECK(ceil_alpha_delta43(1.0, 1'000'000'000) == 1'000'000'000'000LL);
    // the double closest to 0.64 lies a hair above 16/25, which decides the
    // last digit at this scale
    CHECK(ceil_alpha_delta43(0.64, 1'000'000'000) == 640'000'000'001LL);
    CHECK(ceil_alpha_delta43(0.7937005259840998, 1'000'000) == 79'370'053);
    CHECK(ceil_alpha_delta43(1.0, 0) == 0);  // edgeless graphs have no cap to pay
    CHECK_THROWS_AS(ceil_alpha_delta43(0.0, 5), InvalidParamsError);
    CHECK_THROWS_AS(ceil_alpha_delta43(-1.0, 5), InvalidParamsError);
    CHECK_THROWS_AS(ceil_alpha_delta43(1.0, -1), InvalidParamsError);
}

TEST_CASE("default palette adds the cap to max degree plus one") {
    CHECK(default_vertex_palette(cycle_graph(6), 1.0) == 6);    // 3 + 2 + 1
    CHECK(default_vertex_palette(complete_graph(4), 1.0) == 9);  // 5 + 3 + 1
    CHECK(default_vertex_palette(complete_graph(5), 1.0) == 12);
    CHECK(default_vertex_palette(hypercube_graph(3), 1.0) == 9);
}

TEST_CASE("distinguished pairs match the brute-force ranking") {
    struct Case {
        Graph g;
        double alpha;
    };
    std::vector<Case> cases;
    cases.push_back({cycle_graph(5), 1.0});
    cases.push_back({cycle_graph(6), 1.0});
    cases.push_back({complete_graph(4), 1.0});
    cases.push_back({complete_bipartite(3, 3), 1.0});
    cases.push_back({hypercube_graph(3), 1.0});
    cases.push_back({booster_gadget(), 0.1});
    cases.push_back({asymmetry_gadget(), 0.2});
    cases.push_back({gnp_graph(9, 0.35, 51), 1.0});
    cases.push_back({gnp_graph(9, 0.35, 52), 0.4});
    for (const auto& [g, alpha] : cases) {
        auto idx = SpecialPairsIndex::build(g, alpha);
        CHECK(idx.alpha() == alpha);
        CHECK(idx.cap() == ceil_alpha_delta43(alpha, g.max_degree()));
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(idx.special_of(u) == oracle::special_pairs(g, idx.cap(), u));
            CHECK(static_cast<long long>(idx.special_of(u).size()) <= idx.cap());
        }
    }
}

TEST_CASE("distinguished pairs on hand-worked graphs") {
    auto c5 = SpecialPairsIndex::build(cycle_graph(5), 1.0);
    CHECK(c5.special_of(0) == std::vector<int>{2, 3});
    CHECK(c5.is_special(0, 2));
    CHECK_FALSE(c5.is_special(0, 1));  // adjacent, not second neighborhood

    auto k4 = SpecialPairsIndex::build(complete_graph(4), 1.0);
    for (int u = 0; u < 4; ++u) CHECK(k4.special_of(u).empty());

    auto b = SpecialPairsIndex::build(booster_gadget(), 0.1);
    CHECK(b.cap() == 1);
    CHECK(b.special_of(0) == std::vector<int>{4});
    CHECK(b.special_of(1) == std::vector<int>{8});
    CHECK_FALSE(b.is_special(0, 2));  // the hub outranks the cycle diagonal

    auto a = SpecialPairsIndex::build(asymmetry_gadget(), 0.2);
    CHECK(a.cap() == 1);
    CHECK(a.special_of(0) == std::vector<int>{5});
    CHECK(a.special_of(2) == std::vector<int>{0});
    CHECK(a.is_special(2, 0));
    CHECK_FALSE(a.is_special(0, 2));  // membership is not symmetric
    // both candidates of 1 share one neighbor; the tie goes to the larger id
    CHECK(a.special_of(1) == std::vector<int>{4});
}

TEST_CASE("family membership excludes cycles with a distinguished diagonal") {
    auto k4 = complete_graph(4);
    auto k4idx = SpecialPairsIndex::build(k4, 1.0);
    for (const auto& c : four_cycles_through(k4, 0)) CHECK(four_cycle_in_family(c, k4idx));

    auto b = booster_gadget();
    auto bidx = SpecialPairsIndex::build(b, 0.1);
    CHECK(four_cycle_in_family(CycleRef::from_vertices(b, {0, 1, 2, 3}), bidx));
    CHECK_FALSE(four_cycle_in_family(CycleRef::from_vertices(b, {0, 5, 4, 6}), bidx));
}

TEST_CASE("non-distinguished four-cycle counts stay under the degree bound") {
    auto b = booster_gadget();
    auto bidx = SpecialPairsIndex::build(b, 0.1);
    auto counts = bad_four_cycle_counts(b, bidx, true);
    const double bound = std::pow(5.0, 8.0 / 3.0) / (8.0 * 0.1);
    for (int u = 0; u < 4; ++u) CHECK(counts[static_cast<std::size_t>(u)] == 1);
    for (int h : {4, 8, 12, 16}) CHECK(counts[static_cast<std::size_t>(h)] == 0);
    for (int p : {5, 6, 7, 9, 10, 11}) CHECK(counts[static_cast<std::size_t>(p)] == 1);
    for (long long c : counts) CHECK(static_cast<double>(c) <= bound);

    for (double alpha : {0.7, 1.0}) {
        for (const auto& g : {complete_graph(4), cycle_graph(6), complete_bipartite(3, 3),
                              hypercube_graph(3), gnp_graph(9, 0.35, 61)}) {
            auto idx = SpecialPairsIndex::build(g, alpha);
            auto cs = bad_four_cycle_counts(g, idx, true);
            CHECK(cs.size() == static_cast<std::size_t>(g.vertex_count()));
        }
    }
}

TEST_CASE("least bad member search agrees with exhaustive enumeration") {
    struct Case {
        Graph g;
        double alpha;
    };
    std::vector<Case> cases;
    cases.push_back({complete_graph(4), 1.0});
    cases.push_back({cycle_graph(6), 1.0});
    cases.push_back({hypercube_graph(3), 1.0});
    cases.push_back({booster_gadget(), 0.1});
    cases.push_back({gnp_graph(8, 0.35, 71), 1.0});
    cases.push_back({gnp_graph(8, 0.45, 72), 0.5});
    for (const auto& [g, alpha] : cases) {
        auto idx = SpecialPairsIndex::build(g, alpha);
        std::vector<std::vector<int>> special;
        for (int u = 0; u < g.vertex_count(); ++u) special.push_back(idx.special_of(u));
        for (int palette : {1, 2, 3}) {
            for (std::uint64_t rep = 0; rep < 6; ++rep) {
                auto colors = random_colors(g.vertex_count(), palette,
                                            2000 + rep * 13 + static_cast<std::uint64_t>(palette));
                for (int u = 0; u < g.vertex_count(); ++u) {
                    auto got = find_least_bad_set(g, idx, colors, u);
                    auto expected = oracle::least_bad_member(g, special, colors, u);
                    REQUIRE(got.has_value() == expected.has_value());
                    if (got) {
                        CHECK(got->pivot == u);
                        CHECK(got->is_cycle() == expected->is_cycle);
                        CHECK(got->traversal() == expected->traversal);
                        CHECK(got->badly_colored(colors));
                        CHECK(got->scope() ==
                              std::vector<int>(expected->traversal.begin(),
                                               expected->traversal.end() - 2));
                    }
                }
            }
        }
    }
}

TEST_CASE("under one color every complete-graph vertex pivots its least four-cycle") {
    auto g = complete_graph(4);
    auto idx = SpecialPairsIndex::build(g, 1.0);
    std::vector<int> mono(4, 1);
    auto pick = find_least_bad_set(g, idx, mono, 0);
    REQUIRE(pick.has_value());
    CHECK(pick->is_cycle());
    CHECK(pick->traversal() == std::vector<int>{0, 1, 2, 3});
    CHECK(pick->set_size() == 4);
    CHECK(pick->scope() == std::vector<int>{0, 1});

    // a wide cap turns every hypercube diagonal distinguished, leaving only
    // five-edge paths in the family
    auto q3 = hypercube_graph(3);
    auto q3idx = SpecialPairsIndex::build(q3, 1.0);
    for (const auto& c : four_cycles_through(q3, 0)) CHECK_FALSE(four_cycle_in_family(c, q3idx));
    std::vector<int> mono8(8, 1);
    auto q3pick = find_least_bad_set(q3, q3idx, mono8, 0);
    REQUIRE(q3pick.has_value());
    CHECK_FALSE(q3pick->is_cycle());
    CHECK(q3pick->traversal() == five_paths_from(q3, 0).front().vertices);
}

TEST_CASE("resampling halts with no badly colored family member left") {
    struct Case {
        Graph g;
        double alpha;
    };
    std::vector<Case> cases;
    cases.push_back({cycle_graph(5), 1.0});
    cases.push_back({cycle_graph(6), 1.0});
    cases.push_back({complete_graph(4), 1.0});
    cases.push_back({complete_bipartite(3, 3), 1.0});
    cases.push_back({gnp_graph(8, 0.35, 81), 1.0});
    cases.push_back({gnp_graph(8, 0.35, 82), 0.3});
    VertexColorOptions opt;
    opt.check_progression = true;
    for (const auto& [g, alpha] : cases) {
        auto idx = SpecialPairsIndex::build(g, alpha);
        const int palette = default_vertex_palette(g, alpha);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            RandomStream s(child_seed(500, seed), palette);
            auto res = vertex_color(g, idx, palette, s, opt);
            REQUIRE(res.report.status == RunStatus::completed);
            CHECK(no_bad_member_remains(g, idx, res.coloring));
            CHECK(res.report.phases == static_cast<long long>(res.forest.size()));
            CHECK(res.report.root_iterations <= g.vertex_count());
        }
    }
}

TEST_CASE("one-color palette on a six-vertex path can never halt") {
    auto g = path_graph(6);
    auto idx = SpecialPairsIndex::build(g, 1.0);
    VertexColorOptions opt;
    opt.phase_cap = 40;
    RandomStream s(3, 1);
    auto res = vertex_color(g, idx, 1, s, opt);
    CHECK(res.report.status == RunStatus::phase_limit);
    CHECK(res.report.phases == 40);
}

TEST_CASE("recorded vertex forests replay against an identically seeded stream") {
    struct Case {
        Graph g;
        double alpha;
    };
    std::vector<Case> cases;
    cases.push_back({cycle_graph(6), 1.0});
    cases.push_back({complete_bipartite(3, 3), 1.0});
    cases.push_back({hypercube_graph(3), 1.0});
    cases.push_back({booster_gadget(), 0.1});
    cases.push_back({gnp_graph(8, 0.35, 91), 1.0});
    for (const auto& [g, alpha] : cases) {
        auto idx = SpecialPairsIndex::build(g, alpha);
        const int palette = default_vertex_palette(g, alpha);
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto run_seed = child_seed(600, seed);
            RandomStream s(run_seed, palette);
            auto res = vertex_color(g, idx, palette, s);
            REQUIRE(res.report.status == RunStatus::completed);
            CHECK(vertex_forest_error(g, idx, res.forest) == std::nullopt);

            RandomStream replay(run_seed, palette);
            auto v = vertex_validation(g, idx, res.forest, replay);
            CHECK(v.status == ValidationStatus::success);
            std::uint64_t expected = static_cast<std::uint64_t>(g.vertex_count());
            for (const auto& node : res.forest.nodes)
                expected += static_cast<std::uint64_t>(node.label.set_size() - 2);
            CHECK(replay.draws() == expected);
            CHECK(replay.draws() == s.draws());
        }
    }
}

TEST_CASE("vertex validation rejects unsupported or broken forests") {
    auto b = booster_gadget();
    auto bidx = SpecialPairsIndex::build(b, 0.1);
    const auto main_cycle = CycleRef::from_vertices(b, {0, 1, 2, 3});
    VertexWitnessForest f;
    f.nodes.push_back({0, {0, main_cycle}});
    RandomStream s(1, 6);
    auto v = vertex_validation(b, bidx, f, s);
    CHECK(v.status == ValidationStatus::failure);
    CHECK(v.step == 1);

    // pivot off the labeled cycle is structurally infeasible
    VertexWitnessForest off;
    off.nodes.push_back({0, {5, main_cycle}});
    CHECK(vertex_forest_error(b, bidx, off).has_value());
    RandomStream s2(1, 6);
    CHECK(vertex_validation(b, bidx, off, s2).status == ValidationStatus::infeasible);

    // a cycle outside the family cannot label a node
    VertexWitnessForest excluded;
    excluded.nodes.push_back({0, {0, CycleRef::from_vertices(b, {0, 5, 4, 6})}});
    CHECK(vertex_forest_error(b, bidx, excluded).has_value());

    // child pivot must come from the parent's redrawn prefix
    auto k4 = complete_graph(4);
    auto k4idx = SpecialPairsIndex::build(k4, 1.0);
    VertexWitnessForest stray;
    stray.nodes.push_back({0, {0, CycleRef::from_vertices(k4, {0, 1, 2, 3})}});  // scope {0, 1}
    stray.nodes.push_back({1, {2, CycleRef::from_vertices(k4, {0, 2, 1, 3})}});
    CHECK(vertex_forest_error(k4, k4idx, stray).has_value());
    VertexWitnessForest child_ok;
    child_ok.nodes.push_back({0, {0, CycleRef::from_vertices(k4, {0, 1, 2, 3})}});
    child_ok.nodes.push_back({1, {1, CycleRef::from_vertices(k4, {0, 2, 1, 3})}});
    CHECK(vertex_forest_error(k4, k4idx, child_ok) == std::nullopt);
}

TEST_CASE("vertex forest weight uses the analysis rate per redrawn slot") {
    auto g = complete_graph(4);
    VertexWitnessForest f;
    f.nodes.push_back({0, {0, CycleRef::from_vertices(g, {0, 1, 2, 3})}});
    const double logq = -(4.0 / 3.0) * std::log(3.0);  // alpha = 1, max degree 3
    CHECK(vertex_forest_log_weight(f, 1.0, 3) == doctest::Approx(2.0 * logq).epsilon(1e-12));

    auto p6 = path_graph(6);
    VertexWitnessForest pf;
    pf.nodes.push_back({0, {0, make_five_path(p6, {0, 1, 2, 3, 4, 5})}});
    const double logq2 = -(4.0 / 3.0) * std::log(2.0);
    CHECK(vertex_forest_log_weight(pf, 1.0, 2) == doctest::Approx(4.0 * logq2).epsilon(1e-12));
    CHECK(vertex_forest_log_weight({}, 0.7, 9) == 0.0);
}

TEST_CASE("vertex forest and coloring serialization round-trips") {
    auto g = hypercube_graph(3);
    auto idx = SpecialPairsIndex::build(g, 1.0);
    RandomStream s(13, 4);
    auto res = vertex_color(g, idx, 4, s);
    auto text = forest_text(res.forest);
    std::istringstream in(text);
    auto back = read_vertex_forest(in, g);
    CHECK(forest_text(back) == text);

    std::ostringstream cos;
    write_vertex_coloring(cos, res.coloring);
    std::istringstream cin(cos.str());
    auto cback = read_vertex_coloring(cin, g);
    CHECK(cback.color == res.coloring.color);

    auto k4 = complete_graph(4);
    VertexWitnessForest one;
    one.nodes.push_back({0, {0, CycleRef::from_vertices(k4, {0, 1, 2, 3})}});
    CHECK(forest_text(one) == "0 0 0 1 2 3\n");
    auto p6 = path_graph(6);
    VertexWitnessForest pf;
    pf.nodes.push_back({0, {5, make_five_path(p6, {5, 4, 3, 2, 1, 0})}});
    CHECK(forest_text(pf) == "0 5 5 4 3 2 1 0\n");

    std::istringstream junk("0 0 0 1 3\n");
    CHECK_THROWS_AS(read_vertex_forest(junk, g), ParseError);

    std::ostringstream sidx;
    write_special_index(sidx, g, idx);
    CHECK_FALSE(sidx.str().empty());
}

TEST_CASE("vertex accept loop reruns until distinguished pairs separate") {
    struct Case {
        Graph g;
        double alpha;
    };
    std::vector<Case> cases;
    cases.push_back({cycle_graph(6), 1.0});
    cases.push_back({cycle_graph(10), 1.0});
    cases.push_back({complete_graph(4), 1.0});
    cases.push_back({complete_bipartite(3, 3), 1.0});
    cases.push_back({hypercube_graph(3), 1.0});
    for (const auto& [g, alpha] : cases) {
        auto idx = SpecialPairsIndex::build(g, alpha);
        const int palette = default_vertex_palette(g, alpha);
        RandomStream s(child_seed(700, 1), palette);
        auto res = main_algorithm_vertices(g, idx, palette, s);
        REQUIRE(res.report.status == RunStatus::completed);
        CHECK(is_proper_vertex(g, res.coloring).ok);
        CHECK(is_specially_proper(g, idx, res.coloring).ok);
        CHECK(is_acyclic_vertex(g, res.coloring).ok);
        CHECK(no_bad_member_remains(g, idx, res.coloring));
    }
}

TEST_CASE("vertex accept loop reports hitting the restart cap") {
    auto g = cycle_graph(10);
    auto idx = SpecialPairsIndex::build(g, 1.0);
    MainVertexOptions opt;
    opt.restart_cap = 1;
    RandomStream s(2, 6);
    auto res = main_algorithm_vertices(g, idx, 6, s, opt);
    CHECK(res.report.status == RunStatus::restart_limit);
    CHECK(res.report.restarts == 1);
    CHECK_FALSE(is_specially_proper(g, idx, res.coloring).ok);
}
