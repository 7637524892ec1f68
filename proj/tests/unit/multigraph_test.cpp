#include <doctest.h>

#include "oracles.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/graph_io.hpp"
#include "rgraph/multigraph.hpp"

#include <random>

using namespace rgraph;

namespace {

Multigraph random_multigraph(std::mt19937_64& rng, int n, int m)
{
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (static_cast<int>(pairs.size()) < m) {
        int a = pick(rng), b = pick(rng);
        if (a != b)
            pairs.emplace_back(a, b);
    }
    return Multigraph::from_pairs(n, pairs);
}

} // namespace

TEST_CASE("edge ids follow sorted endpoint order")
{
    std::vector<std::pair<Vertex, Vertex>> pairs{{2, 1}, {0, 3}, {1, 2}, {0, 1}};
    std::vector<EdgeId> ids;
    Multigraph g = Multigraph::from_pairs(4, pairs, &ids);
    REQUIRE(g.edge_count() == 4);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 3});
    CHECK(g.edge(2) == Edge{1, 2});
    CHECK(g.edge(3) == Edge{1, 2});
    CHECK(g.multiplicity(1, 2) == 2);
    CHECK(ids[1] == 1);
    CHECK_THROWS_AS(Multigraph::from_pairs(2, std::vector<std::pair<Vertex, Vertex>>{{1, 1}}), InvalidArgument);
}

TEST_CASE("boundary sizes")
{
    Multigraph p = fixtures::petersen();
    CHECK(boundary(p, fixtures::petersen_outer_cycle()).boundary.size() == 5);
    for (Vertex v = 0; v < p.vertex_count(); ++v)
        CHECK(static_cast<int>(boundary(p, {v}).boundary.size()) == p.degree(v));
    EdgeCut tri = boundary(fixtures::prism(), {0, 1, 2}, 3);
    CHECK(tri.boundary.size() == 3);
    REQUIRE(tri.nontrivial_tight);
    CHECK(*tri.nontrivial_tight);
    CHECK_THROWS_AS(boundary(p, {}), InvalidArgument);
    CHECK_THROWS_AS(boundary(p, complement(10, {})), InvalidArgument);
}

TEST_CASE("contraction")
{
    Contraction c = contract(fixtures::prism(), {0, 1, 2});
    CHECK(oracle::isomorphic(c.graph, fixtures::complete(4)));
    CHECK(c.contracted_vertex == c.graph.vertex_count() - 1);

    Contraction k = contract(fixtures::complete(4), {0, 1});
    CHECK(k.graph.vertex_count() == 3);
    CHECK(k.graph.degree(k.contracted_vertex) == 4);

    Multigraph p = fixtures::petersen();
    CHECK(oracle::isomorphic(contract(p, {4}).graph, p));
}

TEST_CASE("contraction edge map recovers the boundary")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Multigraph g = random_multigraph(rng, 7, 12);
        std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, 126)(rng);
        VertexSet x = from_mask(mask);
        Contraction c = contract(g, x);
        std::vector<EdgeId> at_w;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto mapped = c.edge_map[static_cast<std::size_t>(e)];
            if (mapped && (c.graph.edge(*mapped).u == c.contracted_vertex ||
                           c.graph.edge(*mapped).v == c.contracted_vertex))
                at_w.push_back(e);
        }
        CHECK(at_w == boundary(g, x).boundary);
        CHECK(c.graph.degree(c.contracted_vertex) == oracle::boundary_size(g, mask));
    }
}

TEST_CASE("connectivity and vertex cuts")
{
    CHECK(connectivity(fixtures::prism()) == 3);
    CHECK(connectivity(fixtures::complete(5)) == 4);
    bool found = false;
    for (const VertexCut& cut : find_vertex_cuts(fixtures::complete_bipartite(3, 3), 3))
        if (cut.separator == VertexSet{0, 1, 2}) {
            found = true;
            CHECK(cut.component_count == 3);
            CHECK(cut.component_parities == std::vector<int>{1, 1, 1});
        }
    CHECK(found);
    Multigraph two = disjoint_union(fixtures::complete(4), fixtures::complete(4));
    CHECK(components(two).size() == 2);
    CHECK(connectivity(two) == 0);
}

TEST_CASE("underlying simple graph")
{
    CHECK(underlying_simple(fixtures::c4(2, 2, 2, 2)) == fixtures::cycle(4));
    CHECK(underlying_simple(fixtures::petersen()) == fixtures::petersen());
    Multigraph triple = Multigraph::from_pairs(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 1}, {0, 1}});
    CHECK(underlying_simple(triple).edge_count() == 1);
}

TEST_CASE("isomorphism")
{
    CHECK_FALSE(is_isomorphic_to(fixtures::prism(), fixtures::complete_bipartite(3, 3)));
    CHECK(is_isomorphic_to(fixtures::cycle(4), relabel(fixtures::cycle(4), {2, 0, 3, 1})));
    CHECK_FALSE(is_isomorphic_to(fixtures::c4(2, 2, 2, 2), fixtures::cycle(8)));
}

TEST_CASE("isomorphism agrees with permutation search and is an equivalence")
{
    std::mt19937_64 rng(5);
    std::vector<Multigraph> pool;
    for (int i = 0; i < 40; ++i)
        pool.push_back(random_multigraph(rng, 6, 8));
    for (int i = 0; i < 10; ++i) {
        std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        pool.push_back(relabel(pool[static_cast<std::size_t>(i)], perm));
    }
    for (std::size_t a = 0; a < pool.size(); ++a) {
        CHECK(is_isomorphic_to(pool[a], pool[a]));
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            bool ab = is_isomorphic_to(pool[a], pool[b]);
            CHECK(ab == is_isomorphic_to(pool[b], pool[a]));
            CHECK(ab == oracle::isomorphic(pool[a], pool[b]));
            for (std::size_t c = b + 1; c < pool.size() && ab; ++c)
                if (is_isomorphic_to(pool[b], pool[c]))
                    CHECK(is_isomorphic_to(pool[a], pool[c]));
        }
    }
}

TEST_CASE("handshake, cut parity and component partition")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Multigraph g = random_multigraph(rng, 8, 10);
        int sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        auto comps = components(g);
        std::vector<int> owner(8, -1);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (Vertex v : comps[i]) {
                CHECK(owner[static_cast<std::size_t>(v)] == -1);
                owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        for (int o : owner)
            CHECK(o >= 0);
        for (const Edge& e : g.edges())
            CHECK(owner[static_cast<std::size_t>(e.u)] == owner[static_cast<std::size_t>(e.v)]);
    }
    for (const char* name : {"petersen", "prism", "cube", "octahedron", "c4-2121", "wagner-v8"}) {
        Multigraph g = *fixtures::by_name(name);
        int r = *g.regular_degree();
        int n = g.vertex_count();
        for (std::uint64_t x = 1; x + 1 < (std::uint64_t{1} << n); ++x)
            CHECK((oracle::boundary_size(g, x) - r * std::popcount(x)) % 2 == 0);
    }
}

TEST_CASE("graph text round trip")
{
    for (const std::string& name : fixtures::names()) {
        Multigraph g = *fixtures::by_name(name);
        std::string text = format_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(format_graph(parse_graph(text)) == text);
    }
    Multigraph g = parse_graph("# doubled edge\ngraph 3\n0 1 *2\n1 2\n2 1\n");
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 2) == 2);
    CHECK_THROWS_AS(parse_graph("graph 2\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\n0 1 *0\n"), ParseError);
}
