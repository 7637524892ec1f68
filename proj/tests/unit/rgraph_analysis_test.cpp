#include <doctest.h>

#include "oracles.hpp"
#include "pool.hpp"

#include "rgraph/census.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/lifting.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <random>

using namespace rgraph;

TEST_CASE("verify_r_graph examples")
{
    CHECK(verify_r_graph(fixtures::petersen(), 3).is_r_graph);
    CHECK(verify_r_graph(fixtures::c4(2, 2, 2, 2), 4).is_r_graph);

    RGraphVerdict bridged = verify_r_graph(fixtures::bridged_cubic(), 3);
    CHECK_FALSE(bridged.is_r_graph);
    REQUIRE(bridged.witness);
    CHECK(bridged.witness->side.size() % 2 == 1);
    CHECK(bridged.witness->boundary.size() < 3);

    RGraphVerdict irregular = verify_r_graph(fixtures::cycle(4), 3);
    CHECK_FALSE(irregular.is_r_graph);
    CHECK(irregular.reason == VerdictReason::NotRegular);
    REQUIRE(irregular.witness);
    CHECK(irregular.witness->side.size() == 1);

    CHECK(verify_r_graph(fixtures::complete(5), 4).reason == VerdictReason::OddOrder);
    CHECK_THROWS_AS(verify_r_graph(fixtures::petersen(), 0), InvalidArgument);
}

TEST_CASE("verify_r_graph agrees with subset enumeration and its witnesses certify")
{
    for (int r = 1; r <= 4; ++r)
        for (int n = 2; n <= 6; n += 2)
            for (const Multigraph& g : regular_multigraphs(n, r, 3)) {
                RGraphVerdict v = verify_r_graph(g, r);
                CHECK(v.is_r_graph == oracle::is_r_graph(g, r));
                if (!v.is_r_graph && v.reason == VerdictReason::SmallOddCut) {
                    REQUIRE(v.witness);
                    CHECK(v.witness->side.size() % 2 == 1);
                    CHECK(oracle::boundary_size(g, to_mask(v.witness->side)) < r);
                }
            }
}

TEST_CASE("graphs with a bridge are never r-graphs")
{
    Multigraph g = fixtures::bridged_cubic();
    for (int r = 2; r <= 4; ++r)
        CHECK_FALSE(verify_r_graph(g, r).is_r_graph);
}

TEST_CASE("non-trivial tight cuts")
{
    auto prism = find_nontrivial_tight_cut(fixtures::prism(), 3);
    REQUIRE(prism);
    CHECK(prism->side == VertexSet{0, 1, 2});
    CHECK_FALSE(find_nontrivial_tight_cut(fixtures::complete(4), 3));
    CHECK_FALSE(find_nontrivial_tight_cut(fixtures::petersen(), 3));
    CHECK_THROWS_AS(find_nontrivial_tight_cut(fixtures::bridged_cubic(), 3), PreconditionViolation);
    for (const EdgeCut& c : nontrivial_tight_cuts(fixtures::prism(5), 3))
        CHECK(oracle::is_nontrivial_tight(fixtures::prism(5), c.side, 3));
}

namespace {

VertexCut cut_of(const Multigraph& g, VertexSet s)
{
    for (const VertexCut& c : find_vertex_cuts(underlying_simple(g), static_cast<int>(s.size())))
        if (c.separator == s)
            return c;
    VertexCut c;
    c.separator = s;
    c.components = components_without(g, s);
    c.component_count = static_cast<int>(c.components.size());
    for (const VertexSet& comp : c.components)
        c.component_parities.push_back(static_cast<int>(comp.size() % 2));
    return c;
}

} // namespace

TEST_CASE("two-cut classification examples")
{
    Multigraph c4 = fixtures::c4(2, 1, 2, 1);
    CHECK(classify_two_cut(c4, 3, cut_of(c4, {0, 2})).tag == CutCase::UnderlyingC4);

    // Doubled 6-cycle through u = 0 and v = 1; both sides of {u, v} are even.
    Multigraph even = Multigraph::from_pairs(
        6, std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 2}, {1, 3}, {1, 3}, {2, 3}, {2, 3},
                                                  {0, 4}, {0, 4}, {1, 5}, {1, 5}, {4, 5}, {4, 5}});
    REQUIRE(verify_r_graph(even, 4).is_r_graph);
    auto c = classify_two_cut(even, 4, cut_of(even, {0, 1}));
    CHECK(c.tag == CutCase::EvenComponentsOnly);
    REQUIRE(c.tight_cut);
    CHECK(oracle::is_nontrivial_tight(even, c.tight_cut->side, 4));
    for (std::size_t i = 0; i < c.a.size(); ++i)
        CHECK(c.a[i] == c.b[i]);

    Multigraph prism = fixtures::prism();
    CHECK(classify_two_cut(prism, 3, cut_of(prism, {0, 1})).tag == CutCase::NotApplicable);
}

TEST_CASE("three-cut classification examples")
{
    Multigraph k33 = fixtures::complete_bipartite(3, 3);
    auto c = classify_three_cut(k33, 3, cut_of(k33, {0, 1, 2}));
    CHECK(c.tag == CutCase::UnderlyingK33);
    CHECK(c.separator_independent);
    CHECK(c.exactly_three_components);

    Multigraph blown = fixtures::inflate_vertex(k33, 3);
    VertexSet other_side;
    for (Vertex v : {0, 1, 2})
        other_side.push_back(v);
    auto d = classify_three_cut(blown, 3, cut_of(blown, other_side));
    CHECK(d.tag == CutCase::TightCutFound);
    REQUIRE(d.tight_cut);
    CHECK(d.tight_cut->side.size() == 3);
    CHECK(oracle::is_nontrivial_tight(blown, d.tight_cut->side, 3));

    Multigraph prism = fixtures::prism();
    for (const VertexCut& s : find_vertex_cuts(prism, 3))
        CHECK(classify_three_cut(prism, 3, s).tag == CutCase::NotApplicable);
}

TEST_CASE("lifting examples")
{
    Multigraph k4 = fixtures::complete(4);
    LiftingPlan plan = plan_lifting(k4, {0, 1}, 3, 1);
    CHECK(plan.steps.size() == 2);
    CHECK(plan.delete_vertex_after);
    LiftResult res = apply_lifting(k4, plan);
    CHECK(res.graph.vertex_count() == 2);
    CHECK(res.graph.multiplicity(0, 1) == 3);

    Multigraph prism = fixtures::prism();
    LiftingPlan none = plan_lifting(prism, {0, 1, 2}, 3, 1);
    CHECK(none.steps.empty());
    CHECK(oracle::isomorphic(apply_lifting(prism, none).graph, k4));

    Multigraph p = fixtures::petersen();
    LiftingPlan one = plan_lifting(p, fixtures::petersen_outer_cycle(), 3, 7);
    CHECK(one.steps.size() == 1);
    LiftResult six = apply_lifting(p, one);
    CHECK(six.graph.vertex_count() == 6);
    CHECK(oracle::is_r_graph(six.graph, 3));
    CHECK(lifting_step_count(p, fixtures::petersen_outer_cycle(), 3) == 1);
}

TEST_CASE("stale lifting plans are rejected")
{
    Multigraph k4 = fixtures::complete(4);
    LiftingPlan plan = plan_lifting(k4, {0, 1}, 3, 1);
    LiftingPlan bad = plan;
    bad.steps[0].e1 = 99;
    CHECK_THROWS_AS(apply_lifting(k4, bad), InvalidPlan);
    bad = plan;
    bad.steps[1] = bad.steps[0];
    CHECK_THROWS_AS(apply_lifting(k4, bad), InvalidPlan);
}

TEST_CASE("lifting keeps r-graphs connected across seeds")
{
    std::mt19937_64 rng(17);
    auto samples = pool::small_r_graphs(6, 4, 3);
    int done = 0;
    for (const pool::Sample& s : samples) {
        int n = s.graph.vertex_count();
        if (n < 3)
            continue;
        for (int trial = 0; trial < 5; ++trial) {
            auto mask = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 2)(rng);
            LiftResult res = apply_lifting(s.graph, plan_lifting(s.graph, from_mask(mask), s.r, rng()));
            CHECK(oracle::is_connected(res.graph));
            CHECK(oracle::is_r_graph(res.graph, s.r));
            ++done;
        }
    }
    CHECK(done > 100);
}
