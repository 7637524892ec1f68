#include "pool.hpp"

#include "rgraph/census.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/minor_topology.hpp"
#include "rgraph/pm_cover.hpp"
#include "rgraph/rgraph_analysis.hpp"

namespace pool {

using namespace rgraph;

std::vector<Sample> small_r_graphs(int max_n, int max_r, int max_mu)
{
    std::vector<Sample> out;
    for (int r = 1; r <= max_r; ++r)
        for (int n = 2; n <= max_n; n += 2) {
            int index = 0;
            for (Multigraph& g : regular_multigraphs(n, r, max_mu)) {
                if (verify_r_graph(g, r).is_r_graph)
                    out.push_back({"r" + std::to_string(r) + "n" + std::to_string(n) + "#" + std::to_string(index),
                                   std::move(g), r});
                ++index;
            }
        }
    return out;
}

Multigraph tight_glue(const Multigraph& g1, Vertex a, const Multigraph& g2, Vertex b)
{
    int n1 = g1.vertex_count();
    auto shift1 = [&](Vertex v) { return v < a ? v : v - 1; };
    auto shift2 = [&](Vertex v) { return n1 - 1 + (v < b ? v : v - 1); };
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g1.edges())
        if (e.u != a && e.v != a)
            pairs.emplace_back(shift1(e.u), shift1(e.v));
    for (const Edge& e : g2.edges())
        if (e.u != b && e.v != b)
            pairs.emplace_back(shift2(e.u), shift2(e.v));
    auto ea = g1.incident(a);
    auto eb = g2.incident(b);
    for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i)
        pairs.emplace_back(shift1(g1.other_end(ea[i], a)), shift2(g2.other_end(eb[i], b)));
    return Multigraph::from_pairs(n1 + g2.vertex_count() - 2, pairs);
}

Multigraph plus_matching(const Multigraph& g)
{
    auto pms = enumerate_perfect_matchings(g, 1);
    return fixtures::with_doubled(g, pms.at(0).edge_ids);
}

std::vector<Sample> reduction_fixtures(ReductionMode mode)
{
    using namespace fixtures;
    std::vector<Sample> cubic{
        {"k4", complete(4), 3},
        {"prism", prism(), 3},
        {"cube", cube(), 3},
        {"prism5", prism(5), 3},
        {"prism6", prism(6), 3},
        {"dodecahedron", dodecahedron(), 3},
        {"c4-2121", c4(2, 1, 2, 1), 3},
        {"prism-inflated", inflate_vertex(prism(), 0), 3},
        {"cube-inflated", inflate_vertex(cube(), 0), 3},
        {"prism+cube", tight_glue(prism(), 0, cube(), 0), 3},
        {"k4+c4-2121", tight_glue(complete(4), 0, c4(2, 1, 2, 1), 0), 3},
        {"k33", complete_bipartite(3, 3), 3},
        {"wagner-v8", wagner_v8(), 3},
        {"mobius-10", mobius_ladder(10), 3},
        {"k33-inflated", inflate_vertex(complete_bipartite(3, 3), 0), 3},
        {"v8-inflated", inflate_vertex(wagner_v8(), 0), 3},
        {"v8+k4", tight_glue(wagner_v8(), 0, complete(4), 0), 3},
        {"v8+prism", tight_glue(wagner_v8(), 0, prism(), 0), 3},
        {"k33+k4", tight_glue(complete_bipartite(3, 3), 0, complete(4), 0), 3},
        {"k33+cube", tight_glue(complete_bipartite(3, 3), 0, cube(), 0), 3},
        {"v8+k33", tight_glue(wagner_v8(), 0, complete_bipartite(3, 3), 0), 3},
        {"petersen", petersen(), 3},
    };
    std::vector<Sample> all = cubic;
    for (const Sample& s : cubic)
        all.push_back({s.name + "+pm", plus_matching(s.graph), 4});
    all.push_back({"octahedron", octahedron(), 4});
    all.push_back({"c4-doubled", c4(2, 2, 2, 2), 4});

    std::vector<Sample> out;
    for (Sample& s : all) {
        if (!verify_r_graph(s.graph, s.r).is_r_graph)
            continue;
        bool fits = false;
        switch (mode) {
        case ReductionMode::K5Free:
            fits = !has_k5_minor(s.graph);
            break;
        case ReductionMode::K33Free:
            fits = !has_k33_minor(s.graph);
            break;
        case ReductionMode::CrossingOne:
            fits = crossing_at_most_one(s.graph).verdict != CrossingVerdict::More;
            break;
        }
        if (fits)
            out.push_back(std::move(s));
    }
    return out;
}

} // namespace pool
