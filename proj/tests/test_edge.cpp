#include <cmath>
#include <sstream>
#include <vector>

#include "acx/edge_color.hpp"
#include "acx/generate.hpp"
#include "acx/verify.hpp"
#include "doctest.h"

using namespace acx;

namespace {

std::vector<Graph> small_suite() {
    std::vector<Graph> out;
    out.push_back(cycle_graph(6));
    out.push_back(cycle_graph(8));
    out.push_back(complete_graph(4));
    out.push_back(complete_graph(5));
    out.push_back(complete_bipartite(3, 3));
    out.push_back(hypercube_graph(3));
    out.push_back(gnp_graph(10, 0.3, 77));
    return out;
}

std::string forest_text(const Graph& g, const EdgeWitnessForest& f) {
    std::ostringstream os;
    write_edge_forest(os, g, f);
    return os.str();
}

bool no_bad_cycle_remains(const Graph& g, const EdgeColoring& c) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (find_least_bad_edge_cycle(g, c.color, e)) return false;
    return true;
}

}  // namespace

TEST_CASE("initial coloring draws one color per edge in id order") {
    auto g = complete_graph(4);
    RandomStream s(42, 5);
    auto c = random_edge_coloring(g, 5, s);
    REQUIRE(c.color.size() == 6);
    CHECK(c.palette == 5);
    CHECK(s.draws() == 6);
    RandomStream replay(42, 5);
    for (int e = 0; e < 6; ++e) CHECK(c.color[static_cast<std::size_t>(e)] == replay.next_color());

    RandomStream mismatched(42, 4);
    CHECK_THROWS_AS(random_edge_coloring(g, 5, mismatched), InvalidParamsError);
    CHECK_THROWS_AS(RandomStream(42, 0), InvalidParamsError);
    RandomStream one(42, 1);
    CHECK_THROWS_AS(random_edge_coloring(g, 0, one), InvalidParamsError);
}

TEST_CASE("resampling halts with no badly colored long even cycle left") {
    for (const auto& g : small_suite()) {
        const int palette = 2 * g.max_degree() - 1;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            RandomStream s(child_seed(100, seed), palette);
            auto res = edge_color(g, palette, s);
            REQUIRE(res.report.status == RunStatus::completed);
            CHECK(no_bad_cycle_remains(g, res.coloring));
            CHECK(res.report.phases == static_cast<long long>(res.forest.size()));
            CHECK(res.report.root_iterations <= g.edge_count());
            CHECK_FALSE(res.report.palette_below_guarantee);
            CHECK(res.report.seed == child_seed(100, seed));
        }
    }
}

TEST_CASE("runs are reproducible from the seed") {
    auto g = complete_graph(5);
    RandomStream a(7, 4), b(7, 4);
    auto ra = edge_color(g, 4, a);
    auto rb = edge_color(g, 4, b);
    CHECK(ra.coloring.color == rb.coloring.color);
    CHECK(forest_text(g, ra.forest) == forest_text(g, rb.forest));
    CHECK(a.draws() == b.draws());
}

TEST_CASE("one-color palette on a six-cycle can never halt") {
    auto g = cycle_graph(6);
    EdgeColorOptions opt;
    opt.phase_cap = 50;
    RandomStream s(3, 1);
    auto res = edge_color(g, 1, s, opt);
    CHECK(res.report.status == RunStatus::phase_limit);
    CHECK(res.report.phases == 50);
    CHECK(res.report.palette_below_guarantee);
    CHECK(res.forest.size() == 50);
}

TEST_CASE("progression instrumentation stays silent across the suite") {
    EdgeColorOptions opt;
    opt.check_progression = true;
    for (const auto& g : small_suite()) {
        const int palette = 2 * g.max_degree() - 1;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            RandomStream s(child_seed(200, seed), palette);
            auto res = edge_color(g, palette, s, opt);
            CHECK(res.report.status == RunStatus::completed);
        }
    }
}

TEST_CASE("recorded forests replay against an identically seeded stream") {
    long long replayed = 0;
    for (const auto& g : small_suite()) {
        const int palette = 2 * g.max_degree() - 1;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto run_seed = child_seed(300, seed);
            RandomStream s(run_seed, palette);
            auto res = edge_color(g, palette, s);
            REQUIRE(res.report.status == RunStatus::completed);
            CHECK(edge_forest_error(g, res.forest) == std::nullopt);

            RandomStream replay(run_seed, palette);
            auto v = edge_validation(g, res.forest, replay);
            CHECK(v.status == ValidationStatus::success);
            // the walk consumes exactly the initial draws plus each redrawn scope
            std::uint64_t expected = static_cast<std::uint64_t>(g.edge_count());
            for (const auto& node : res.forest.nodes)
                expected += static_cast<std::uint64_t>(node.label.cycle.length() - 2);
            CHECK(replay.draws() == expected);
            CHECK(replay.draws() == s.draws());
            ++replayed;
        }
    }
    CHECK(replayed == 7 * 30);
}

TEST_CASE("validation flags forests the stream does not support") {
    auto g = cycle_graph(6);
    EdgeWitnessForest f;
    f.nodes.push_back({0, {0, CycleRef::from_vertices(g, {0, 1, 2, 3, 4, 5})}});
    // at K=3 most seeds do not start with a badly colored six-cycle
    RandomStream s(0, 3);
    auto v = edge_validation(g, f, s);
    CHECK(v.status == ValidationStatus::failure);
    CHECK(v.step == 1);
    CHECK_FALSE(v.detail.empty());
}

TEST_CASE("structurally broken forests are rejected up front") {
    auto g = cycle_graph(6);
    const auto six = CycleRef::from_vertices(g, {0, 1, 2, 3, 4, 5});

    EdgeWitnessForest depth_jump;
    depth_jump.nodes.push_back({0, {0, six}});
    depth_jump.nodes.push_back({2, {1, six}});
    REQUIRE(edge_forest_error(g, depth_jump).has_value());
    RandomStream s1(1, 3);
    CHECK(edge_validation(g, depth_jump, s1).status == ValidationStatus::infeasible);

    EdgeWitnessForest dup_roots;
    dup_roots.nodes.push_back({0, {2, six}});
    dup_roots.nodes.push_back({0, {2, six}});
    CHECK(edge_forest_error(g, dup_roots).has_value());

    EdgeWitnessForest off_cycle;
    off_cycle.nodes.push_back({0, {0, six}});
    CHECK(edge_forest_error(g, off_cycle) == std::nullopt);
    // child anchored outside the parent's redraw scope: scope of edge 0 on the
    // six-cycle is {0, 2, 3, 4}, so edge 5 cannot head a child phase
    EdgeWitnessForest stray_child = off_cycle;
    stray_child.nodes.push_back({1, {5, six}});
    CHECK(edge_forest_error(g, stray_child).has_value());
    EdgeWitnessForest ok_child = off_cycle;
    ok_child.nodes.push_back({1, {3, six}});
    CHECK(edge_forest_error(g, ok_child) == std::nullopt);

    auto k4 = complete_graph(4);
    EdgeWitnessForest wrong_anchor;
    wrong_anchor.nodes.push_back({0, {*k4.edge_id(0, 1), CycleRef::from_vertices(k4, {0, 2, 1, 3})}});
    // (0,1) is a chord of that cycle, not one of its edges
    CHECK(edge_forest_error(k4, wrong_anchor).has_value());
}

TEST_CASE("forest weight multiplies per-node palette powers") {
    auto g = cycle_graph(6);
    const auto six = CycleRef::from_vertices(g, {0, 1, 2, 3, 4, 5});
    EdgeWitnessForest empty;
    CHECK(edge_forest_weight(empty, 2) == doctest::Approx(1.0));
    CHECK(edge_forest_log_weight(empty, 2) == 0.0);

    EdgeWitnessForest one;
    one.nodes.push_back({0, {0, six}});
    CHECK(edge_forest_weight(one, 2) == doctest::Approx(1.0 / 81.0).epsilon(1e-12));
    CHECK(edge_forest_log_weight(one, 2) == doctest::Approx(-4.0 * std::log(3.0)).epsilon(1e-12));

    EdgeWitnessForest two = one;
    two.nodes.push_back({0, {1, six}});
    CHECK(edge_forest_weight(two, 2) == doctest::Approx(1.0 / (81.0 * 81.0)).epsilon(1e-12));
}

TEST_CASE("single-node six-cycle forest validates at close to its weight") {
    auto g = cycle_graph(6);
    EdgeWitnessForest f;
    f.nodes.push_back({0, {0, CycleRef::from_vertices(g, {0, 1, 2, 3, 4, 5})}});
    const int trials = 20000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        RandomStream s(child_seed(0xBEEF, static_cast<std::uint64_t>(t)), 3);
        if (edge_validation(g, f, s).status == ValidationStatus::success) ++hits;
    }
    const double p = 1.0 / 81.0;
    const double sigma = std::sqrt(p * (1.0 - p) / trials);
    CHECK(std::abs(static_cast<double>(hits) / trials - p) <= 4.0 * sigma);
}

TEST_CASE("forest and coloring serialization round-trips") {
    auto g = cycle_graph(8);
    RandomStream s(11, 3);
    auto res = edge_color(g, 3, s);
    auto text = forest_text(g, res.forest);
    std::istringstream in(text);
    auto back = read_edge_forest(in, g);
    CHECK(forest_text(g, back) == text);
    REQUIRE(back.size() == res.forest.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.nodes[i].depth == res.forest.nodes[i].depth);
        CHECK(back.nodes[i].label.edge == res.forest.nodes[i].label.edge);
        CHECK(back.nodes[i].label.cycle == res.forest.nodes[i].label.cycle);
    }

    std::ostringstream cos;
    write_edge_coloring(cos, res.coloring);
    std::istringstream cin(cos.str());
    auto cback = read_edge_coloring(cin, g);
    CHECK(cback.color == res.coloring.color);

    auto c6 = cycle_graph(6);
    EdgeWitnessForest one;
    one.nodes.push_back({0, {0, CycleRef::from_vertices(c6, {0, 1, 2, 3, 4, 5})}});
    CHECK(forest_text(c6, one) == "0 0 1 0 1 2 3 4 5\n");

    std::istringstream junk("0 0 1 0 1 2\n");
    CHECK_THROWS_AS(read_edge_forest(junk, c6), ParseError);
    std::istringstream missing_edge("0 0 3 0 1 2 3 4 5\n");
    CHECK_THROWS_AS(read_edge_forest(missing_edge, c6), ParseError);
}

TEST_CASE("accept loop reruns until the coloring is strongly proper") {
    for (const auto& g : small_suite()) {
        const int palette = 2 * g.max_degree() - 1;
        RandomStream s(child_seed(400, 1), palette);
        auto res = main_algorithm_edges(g, palette, s);
        REQUIRE(res.report.status == RunStatus::completed);
        CHECK(is_strongly_proper(g, res.coloring).ok);
        CHECK(is_proper_edge(g, res.coloring).ok);
        CHECK(is_acyclic_edge(g, res.coloring).ok);
        CHECK(no_bad_cycle_remains(g, res.coloring));
        CHECK(res.report.restarts < 10'000);
    }
}

TEST_CASE("accept loop reports hitting the restart cap") {
    auto g = complete_graph(5);
    MainEdgeOptions opt;
    opt.restart_cap = 1;
    // a seed whose first two passes are not strongly proper (K5 needs ~150 on average)
    RandomStream s(5, 7);
    auto res = main_algorithm_edges(g, 7, s, opt);
    CHECK(res.report.status == RunStatus::restart_limit);
    CHECK(res.report.restarts == 1);
    CHECK_FALSE(is_strongly_proper(g, res.coloring).ok);
}
