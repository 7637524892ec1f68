#include <doctest.h>

#include "oracles.hpp"

#include "rgraph/census.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/graph_io.hpp"

#include <algorithm>

using namespace rgraph;

namespace {

// Every loopless multigraph on n vertices with multiplicities up to max_mu,
// reduced to one per isomorphism class with the permutation oracle.
std::vector<Multigraph> brute_regular(int n, int r, int max_mu)
{
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);
    std::vector<Multigraph> found;
    std::vector<int> mult(slots.size(), 0);
    while (true) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (std::size_t s = 0; s < slots.size(); ++s)
            for (int c = 0; c < mult[s]; ++c) {
                pairs.emplace_back(slots[s].first, slots[s].second);
                ++deg[static_cast<std::size_t>(slots[s].first)];
                ++deg[static_cast<std::size_t>(slots[s].second)];
            }
        if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == r; })) {
            Multigraph g = Multigraph::from_pairs(n, pairs);
            if (oracle::is_connected(g) &&
                std::none_of(found.begin(), found.end(), [&](const Multigraph& h) { return oracle::isomorphic(g, h); }))
                found.push_back(g);
        }
        std::size_t s = 0;
        while (s < mult.size() && mult[s] == max_mu)
            mult[s++] = 0;
        if (s == mult.size())
            break;
        ++mult[s];
    }
    return found;
}

} // namespace

TEST_CASE("cubic multigraph counts")
{
    CHECK(regular_multigraphs(2, 3, 3).size() == 1);
    CHECK(regular_multigraphs(4, 3, 3).size() == 2);
    CHECK(regular_multigraphs(6, 3, 3).size() == 6);
    CHECK(regular_multigraphs(8, 3, 3).size() == 20);
    CHECK(regular_multigraphs(8, 3, 1).size() == 5);
    CHECK(regular_multigraphs(10, 3, 1).size() == 19);
}

TEST_CASE("generation agrees with brute force")
{
    for (auto [n, r, mu] : {std::tuple{4, 3, 3}, std::tuple{4, 4, 3}, std::tuple{5, 4, 2}, std::tuple{6, 3, 2},
                            std::tuple{5, 2, 2}, std::tuple{6, 4, 1}}) {
        auto ours = regular_multigraphs(n, r, mu);
        auto brute = brute_regular(n, r, mu);
        CHECK(ours.size() == brute.size());
        for (const Multigraph& g : ours) {
            CHECK(g.regular_degree() == r);
            CHECK(oracle::is_connected(g));
            CHECK(std::count_if(brute.begin(), brute.end(),
                                [&](const Multigraph& h) { return oracle::isomorphic(g, h); }) == 1);
        }
    }
}

TEST_CASE("simple graph counts")
{
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        CHECK(simple_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("census report")
{
    CensusOptions opt;
    opt.r = 3;
    opt.max_n = 6;
    CensusReport rep = run_census(opt);
    CHECK(rep.generated == 1 + 2 + 6);
    CHECK(rep.class2_count() == 0);
    for (const CensusEntry& e : rep.entries) {
        Multigraph g = parse_graph(e.graph);
        CHECK(oracle::is_r_graph(g, 3));
        CHECK(e.class1 == oracle::colorable(g, 3));
        CHECK(e.has_2r_pm);
    }
    nlohmann::json j = rep.to_json();
    CHECK(j["r_graphs"] == rep.entries.size());
    CHECK(j["class2"] == 0);

    CensusOptions two = opt;
    two.r = 2;
    CensusReport cycles = run_census(two);
    CHECK(cycles.generated == 5);
    CHECK(cycles.entries.size() == 3);
}

TEST_CASE("Petersen is the class 2 cubic r-graph on ten vertices")
{
    CensusOptions opt;
    opt.r = 3;
    opt.min_n = 10;
    opt.max_n = 10;
    opt.max_mu = 1;
    CensusReport rep = run_census(opt);
    CHECK(rep.generated == 19);
    REQUIRE(rep.class2_count() == 1);
    for (const CensusEntry& e : rep.entries)
        if (!e.class1) {
            CHECK(oracle::isomorphic(parse_graph(e.graph), fixtures::petersen()));
            CHECK(e.has_2r_pm);
        }
}

TEST_CASE("census output does not depend on the thread count")
{
    CensusOptions opt;
    opt.r = 4;
    opt.max_n = 6;
    opt.max_mu = 2;
    CensusOptions par = opt;
    par.jobs = 3;
    CHECK(run_census(opt).to_json() == run_census(par).to_json());
}
