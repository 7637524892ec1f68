#include <doctest.h>

#include "oracles.hpp"

#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/pm_cover.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <algorithm>
#include <set>

using namespace rgraph;

TEST_CASE("perfect matching enumeration matches subset enumeration")
{
    CHECK(enumerate_perfect_matchings(fixtures::petersen()).size() == 6);
    CHECK(enumerate_perfect_matchings(fixtures::complete(4)).size() == 3);
    CHECK(enumerate_perfect_matchings(fixtures::c4(2, 2, 2, 2)).size() == 8);
    CHECK(enumerate_perfect_matchings(fixtures::cycle(5)).empty());
    CHECK(enumerate_perfect_matchings(fixtures::petersen(), 2).size() == 2);
    for (const std::string& name : fixtures::names()) {
        Multigraph g = *fixtures::by_name(name);
        if (g.edge_count() > 24)
            continue;
        auto ours = enumerate_perfect_matchings(g);
        auto brute = oracle::perfect_matchings(g);
        std::set<std::vector<EdgeId>> a, b(brute.begin(), brute.end());
        for (const Matching& m : ours) {
            CHECK(m.perfect);
            a.insert(m.edge_ids);
        }
        CHECK(a.size() == ours.size());
        CHECK(a == b);
        CHECK(std::is_sorted(ours.begin(), ours.end()));
    }
}

TEST_CASE("edge coloring examples")
{
    CHECK_FALSE(edge_color(fixtures::petersen(), 3));
    auto v8 = edge_color(fixtures::wagner_v8(), 3);
    REQUIRE(v8);
    CHECK(oracle::is_proper_coloring(fixtures::wagner_v8(), v8->colors, 3));
    auto k33 = edge_color(fixtures::complete_bipartite(3, 3), 3);
    REQUIRE(k33);
    CHECK(oracle::is_proper_coloring(fixtures::complete_bipartite(3, 3), k33->colors, 3));
    CHECK_THROWS_AS(edge_color(fixtures::petersen(), 0), InvalidArgument);
}

TEST_CASE("edge coloring agrees with plain backtracking")
{
    for (const char* name : {"k4", "prism", "cube", "c4-2121", "c4-doubled", "k33", "octahedron", "k5", "wagner-v8"}) {
        Multigraph g = *fixtures::by_name(name);
        for (int k = g.max_degree() - 1; k <= g.max_degree() + 1; ++k) {
            auto c = edge_color(g, k);
            CHECK(c.has_value() == oracle::colorable(g, k));
            if (c)
                CHECK(oracle::is_proper_coloring(g, c->colors, k));
        }
    }
}

TEST_CASE("(t,r)-PM search examples")
{
    Multigraph p = fixtures::petersen();
    CHECK_FALSE(find_tr_pm(p, 1, 3));
    auto two = find_tr_pm(p, 2, 3);
    REQUIRE(two);
    CHECK(two->matchings.size() == 6);
    CHECK(oracle::cover_is_valid(p, *two));
    std::set<Matching> distinct(two->matchings.begin(), two->matchings.end());
    CHECK(distinct.size() == 6);

    auto k4 = find_tr_pm(fixtures::complete(4), 3, 3);
    REQUIRE(k4);
    CHECK(oracle::cover_is_valid(fixtures::complete(4), *k4));
    CHECK_THROWS_AS(find_tr_pm(fixtures::bridged_cubic(), 1, 3), PreconditionViolation);
}

TEST_CASE("class 1 exactly when a (1,r)-PM exists")
{
    for (const std::string& name : fixtures::names()) {
        Multigraph g = *fixtures::by_name(name);
        auto r = g.regular_degree();
        if (!r || !verify_r_graph(g, *r).is_r_graph)
            continue;
        auto c = edge_color(g, *r);
        auto cover = find_tr_pm(g, 1, *r);
        CHECK_MESSAGE(c.has_value() == cover.has_value(), name);
        if (c) {
            for (int t : {1, 3}) {
                PMCover built = cover_from_coloring(g, *c, t, *r);
                CHECK(validate_tr_pm(g, built).ok);
                CHECK(oracle::cover_is_valid(g, built));
            }
        }
        if (cover)
            CHECK(validate_tr_pm(g, *cover).ok);
    }
}

TEST_CASE("cover validation")
{
    Multigraph k4 = fixtures::complete(4);
    auto pms = enumerate_perfect_matchings(k4);
    PMCover good{1, 3, pms};
    CHECK(validate_tr_pm(k4, good).ok);
    PMCover repeated{1, 3, {pms[0], pms[0], pms[0]}};
    CoverCheck bad = validate_tr_pm(k4, repeated);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.reasons.empty());
    PMCover short_list{1, 3, {pms[0], pms[1]}};
    CHECK_FALSE(validate_tr_pm(k4, short_list).ok);
    PMCover stray = good;
    stray.matchings[0].edge_ids.push_back(40);
    CHECK_FALSE(validate_tr_pm(k4, stray).ok);
}

TEST_CASE("search budget is reported distinctly")
{
    SearchBudget tiny{5};
    CHECK_THROWS_AS(edge_color(fixtures::petersen(), 3, tiny), BudgetExceeded);
    CHECK_THROWS_AS(find_tr_pm(fixtures::dodecahedron(), 2, 3, tiny), BudgetExceeded);
}

TEST_CASE("Kempe chains")
{
    Multigraph c6 = fixtures::cycle(6);
    auto pms = enumerate_perfect_matchings(c6);
    REQUIRE(pms.size() == 2);
    auto chains = kempe_chains(c6, pms[0], pms[1]);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].is_cycle);
    CHECK(chains[0].edges.size() == 6);
    auto [a, b] = kempe_switch(c6, pms[0], pms[1], chains[0]);
    CHECK(a == pms[1]);
    CHECK(b == pms[0]);
    CHECK(kempe_chains(c6, pms[0], pms[0]).empty());

    KempeChain fake = chains[0];
    fake.edges.pop_back();
    CHECK_THROWS_AS(kempe_switch(c6, pms[0], pms[1], fake), InvalidArgument);
}

TEST_CASE("Kempe switching on Petersen matchings is an involution")
{
    Multigraph p = fixtures::petersen();
    auto pms = enumerate_perfect_matchings(p);
    for (std::size_t i = 0; i < pms.size(); ++i)
        for (std::size_t j = i + 1; j < pms.size(); ++j) {
            auto chains = kempe_chains(p, pms[i], pms[j]);
            std::set<EdgeId> covered;
            for (const KempeChain& c : chains) {
                for (EdgeId e : c.edges)
                    CHECK(covered.insert(e).second);
                auto [a, b] = kempe_switch(p, pms[i], pms[j], c);
                CHECK(oracle::is_perfect_matching(p, a.edge_ids));
                CHECK(oracle::is_perfect_matching(p, b.edge_ids));
                auto [a2, b2] = kempe_switch(p, a, b, c);
                CHECK(a2 == pms[i]);
                CHECK(b2 == pms[j]);
            }
            std::vector<EdgeId> diff;
            std::set_symmetric_difference(pms[i].edge_ids.begin(), pms[i].edge_ids.end(), pms[j].edge_ids.begin(),
                                          pms[j].edge_ids.end(), std::back_inserter(diff));
            CHECK(std::vector<EdgeId>(covered.begin(), covered.end()) == diff);
        }
}

TEST_CASE("near-perfect matchings give chains with two ends")
{
    Multigraph path = Multigraph::from_pairs(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
    auto m1 = make_matching(path, {0, 2});
    auto m2 = make_matching(path, {1});
    REQUIRE(m1);
    REQUIRE(m2);
    auto chains = kempe_chains(path, *m1, *m2);
    REQUIRE(chains.size() == 1);
    CHECK_FALSE(chains[0].is_cycle);
    CHECK(chains[0].endpoints == std::vector<Vertex>{0, 3});
    CHECK_FALSE(make_matching(path, {0, 1}));
}

TEST_CASE("regular bipartite fixtures have perfect matchings")
{
    for (Multigraph g : {fixtures::complete_bipartite(3, 3), fixtures::cube(), fixtures::c4(2, 2, 2, 2),
                         fixtures::complete_bipartite(4, 4)})
        CHECK_FALSE(enumerate_perfect_matchings(g, 1).empty());
}
