#include <doctest.h>

#include "oracles.hpp"

#include "rgraph/census.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/minor_topology.hpp"

#include <random>

using namespace rgraph;

namespace {

Multigraph two_k4_on_triangle()
{
    return Multigraph::from_pairs(5, std::vector<std::pair<Vertex, Vertex>>{
                                         {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

} // namespace

TEST_CASE("planarity examples")
{
    CHECK(is_planar(fixtures::complete(4)));
    CHECK_FALSE(is_planar(fixtures::wagner_v8()));
    CHECK_FALSE(is_planar(fixtures::petersen()));
    CHECK(is_planar(fixtures::dodecahedron()));
    CHECK(is_planar(fixtures::c4(3, 3, 3, 3)));
}

TEST_CASE("minor examples")
{
    CHECK(has_k33_minor(fixtures::petersen()));
    CHECK_FALSE(has_k5_minor(fixtures::wagner_v8()));
    CHECK_FALSE(has_k33_minor(fixtures::complete(5)));
    CHECK(has_k5_minor(fixtures::complete(5)));
    auto model = find_minor(fixtures::petersen(), Forbidden::K5);
    REQUIRE(model);
    CHECK(is_minor_model(fixtures::petersen(), *model));
}

TEST_CASE("minor search agrees with branch-label enumeration on small graphs")
{
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int n = 5; n <= 7; ++n)
        for (const Multigraph& g : simple_graphs(n)) {
            if (!oracle::is_connected(g) || !std::bernoulli_distribution(n == 7 ? 0.03 : 0.5)(rng))
                continue;
            CHECK(has_k5_minor(g) == oracle::has_minor(g, 5, oracle::k5_edges()));
            CHECK(has_k33_minor(g) == oracle::has_minor(g, 6, oracle::k33_edges()));
            ++checked;
        }
    CHECK(checked > 40);
}

TEST_CASE("crossing number at most one")
{
    for (const char* name : {"k5", "k33", "wagner-v8", "mobius-10"}) {
        Multigraph g = *fixtures::by_name(name);
        CrossingCertificate c = crossing_at_most_one(g);
        CHECK(c.verdict == CrossingVerdict::OneCrossing);
        REQUIRE(c.crossing_pair);
        CHECK(verify_crossing_certificate(g, c));
        Multigraph s = underlying_simple(g);
        CHECK(is_planar(planarize_pair(s, c.crossing_pair->first, c.crossing_pair->second)));
    }
    CHECK(crossing_at_most_one(fixtures::petersen()).verdict == CrossingVerdict::More);
    CrossingCertificate planar = crossing_at_most_one(fixtures::cube());
    CHECK(planar.verdict == CrossingVerdict::Planar);
    CHECK_FALSE(planar.crossing_pair);
    CHECK(crossing_certificates(fixtures::cube()).empty());

    CrossingCertificate forged = crossing_at_most_one(fixtures::complete(5));
    forged.verdict = CrossingVerdict::Planar;
    forged.crossing_pair.reset();
    CHECK_FALSE(verify_crossing_certificate(fixtures::complete(5), forged));
}

TEST_CASE("clique-sum decomposition examples")
{
    CliqueSumTree t = wagner_decompose(two_k4_on_triangle(), Forbidden::K5);
    CHECK(verify_clique_sum_tree(two_k4_on_triangle(), t));
    REQUIRE(t.leaves().size() == 2);
    for (int leaf : t.leaves())
        CHECK(t.nodes[static_cast<std::size_t>(leaf)].kind == PieceKind::Planar);
    CHECK(t.nodes[static_cast<std::size_t>(t.root)].separator.size() == 3);

    CliqueSumTree v8 = wagner_decompose(fixtures::wagner_v8(), Forbidden::K5);
    REQUIRE(v8.nodes.size() == 1);
    CHECK(v8.nodes[0].kind == PieceKind::WagnerV8);

    CliqueSumTree k5 = wagner_decompose(fixtures::complete(5), Forbidden::K33);
    REQUIRE(k5.nodes.size() == 1);
    CHECK(k5.nodes[0].kind == PieceKind::K5);

    CHECK_THROWS_AS(wagner_decompose(fixtures::petersen(), Forbidden::K5), PreconditionViolation);
    CHECK_THROWS_AS(wagner_decompose(fixtures::complete_bipartite(3, 3), Forbidden::K33), PreconditionViolation);
}

TEST_CASE("decompositions recompose and respect separator bounds")
{
    for (const std::string& name : fixtures::names()) {
        Multigraph g = *fixtures::by_name(name);
        for (Forbidden mode : {Forbidden::K5, Forbidden::K33}) {
            if (find_minor(g, mode))
                continue;
            CliqueSumTree t = wagner_decompose(g, mode);
            std::string why;
            CHECK_MESSAGE(verify_clique_sum_tree(g, t, &why), name << ": " << why);
            CHECK(recompose(t) == underlying_simple(g));
            std::size_t bound = mode == Forbidden::K5 ? 3 : 2;
            for (const CliqueSumNode& node : t.nodes)
                if (node.kind == PieceKind::Split)
                    CHECK(node.separator.size() <= bound);
        }
    }
}

TEST_CASE("tampered decompositions fail verification")
{
    CliqueSumTree t = wagner_decompose(two_k4_on_triangle(), Forbidden::K5);
    CliqueSumTree wrong_tag = t;
    wrong_tag.nodes[static_cast<std::size_t>(wrong_tag.leaves()[0])].kind = PieceKind::K5;
    CHECK_FALSE(verify_clique_sum_tree(two_k4_on_triangle(), wrong_tag));
    CHECK_FALSE(verify_clique_sum_tree(fixtures::complete(5), t));
}

TEST_CASE("splittable three-cuts")
{
    Multigraph g = fixtures::three_cut_composite();
    auto s = find_splittable_three_cut(g);
    REQUIRE(s);
    CHECK(s->cut.component_count >= 3);
    CHECK_FALSE(has_k5_minor(s->augmented));
    CHECK_THROWS_AS(find_splittable_three_cut(fixtures::cube()), PreconditionViolation);
    CHECK_THROWS_AS(find_splittable_three_cut(fixtures::wagner_v8()), PreconditionViolation);
}

TEST_CASE("minor-free fixtures with high connectivity are planar")
{
    for (const std::string& name : fixtures::names()) {
        Multigraph s = underlying_simple(*fixtures::by_name(name));
        int k = connectivity(s);
        if (k >= 4 && !has_k5_minor(s))
            CHECK(is_planar(s));
        if (k >= 3 && !has_k33_minor(s))
            CHECK((is_planar(s) || oracle::isomorphic(s, fixtures::complete(5))));
    }
}

TEST_CASE("crossing verdict is planar exactly when the graph is")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(5, 9)(rng);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (std::bernoulli_distribution(0.45)(rng))
                    pairs.emplace_back(a, b);
        Multigraph g = Multigraph::from_pairs(n, pairs);
        CrossingCertificate c = crossing_at_most_one(g);
        CHECK((c.verdict == CrossingVerdict::Planar) == is_planar(g));
        CHECK(verify_crossing_certificate(g, c));
    }
}
