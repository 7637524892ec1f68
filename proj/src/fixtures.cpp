#include "rgraph/fixtures.hpp"

#include "rgraph/errors.hpp"

#include <map>

namespace rgraph::fixtures {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

void add(Pairs& p, Vertex a, Vertex b, int copies = 1)
{
    for (int i = 0; i < copies; ++i)
        p.emplace_back(a, b);
}

} // namespace

Multigraph complete(int n)
{
    Pairs p;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            add(p, a, b);
    return Multigraph::from_pairs(n, p);
}

Multigraph complete_bipartite(int a, int b)
{
    Pairs p;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            add(p, i, a + j);
    return Multigraph::from_pairs(a + b, p);
}

Multigraph cycle(int n)
{
    Pairs p;
    for (Vertex i = 0; i < n; ++i)
        add(p, i, (i + 1) % n);
    return Multigraph::from_pairs(n, p);
}

Multigraph c4(int m01, int m12, int m23, int m30)
{
    Pairs p;
    add(p, 0, 1, m01);
    add(p, 1, 2, m12);
    add(p, 2, 3, m23);
    add(p, 3, 0, m30);
    return Multigraph::from_pairs(4, p);
}

Multigraph petersen()
{
    Pairs p;
    for (Vertex i = 0; i < 5; ++i) {
        add(p, i, (i + 1) % 5);
        add(p, i, i + 5);
        add(p, i + 5, (i + 2) % 5 + 5);
    }
    return Multigraph::from_pairs(10, p);
}

VertexSet petersen_outer_cycle()
{
    return {0, 1, 2, 3, 4};
}

Multigraph mobius_ladder(int n)
{
    if (n < 4 || n % 2 != 0)
        throw InvalidArgument("mobius ladder needs an even n >= 4");
    Pairs p;
    for (Vertex i = 0; i < n; ++i)
        add(p, i, (i + 1) % n);
    for (Vertex i = 0; i < n / 2; ++i)
        add(p, i, i + n / 2);
    return Multigraph::from_pairs(n, p);
}

Multigraph wagner_v8()
{
    return mobius_ladder(8);
}

Multigraph prism(int k)
{
    Pairs p;
    for (Vertex i = 0; i < k; ++i) {
        add(p, i, (i + 1) % k);
        add(p, k + i, k + (i + 1) % k);
        add(p, i, k + i);
    }
    return Multigraph::from_pairs(2 * k, p);
}

Multigraph prism()
{
    return prism(3);
}

Multigraph cube()
{
    return prism(4);
}

Multigraph octahedron()
{
    Pairs p;
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = a + 1; b < 6; ++b)
            if (!(a % 2 == 0 && b == a + 1))
                add(p, a, b);
    return Multigraph::from_pairs(6, p);
}

Multigraph dodecahedron()
{
    Pairs p;
    for (Vertex i = 0; i < 5; ++i) {
        add(p, i, (i + 1) % 5);
        add(p, i, 5 + 2 * i);
        add(p, 15 + i, 15 + (i + 1) % 5);
        add(p, 15 + i, 5 + 2 * i + 1);
    }
    for (Vertex j = 0; j < 10; ++j)
        add(p, 5 + j, 5 + (j + 1) % 10);
    return Multigraph::from_pairs(20, p);
}

Multigraph bridged_cubic()
{
    Pairs p;
    // Side A: K4 on 0..3 with edge 01 subdivided by 4.
    // Side B: K4 on 5..8 with edge 56 subdivided by 9.
    for (int off : {0, 5}) {
        add(p, off + 0, off + 2);
        add(p, off + 0, off + 3);
        add(p, off + 1, off + 2);
        add(p, off + 1, off + 3);
        add(p, off + 2, off + 3);
        add(p, off + 0, off + 4);
        add(p, off + 1, off + 4);
    }
    add(p, 4, 9);
    return Multigraph::from_pairs(10, p);
}

Multigraph scaled(const Multigraph& g, int k)
{
    Pairs p;
    for (const Edge& e : g.edges())
        add(p, e.u, e.v, k);
    return Multigraph::from_pairs(g.vertex_count(), p);
}

Multigraph with_doubled(const Multigraph& g, const std::vector<EdgeId>& matching)
{
    Pairs extra;
    for (EdgeId e : matching)
        add(extra, g.edge(e).u, g.edge(e).v);
    return with_added_edges(g, extra);
}

Multigraph inflate_vertex(const Multigraph& g, Vertex v)
{
    auto inc = g.incident(v);
    int d = static_cast<int>(inc.size());
    if (d < 3)
        throw InvalidArgument("inflate_vertex needs degree >= 3");
    int n = g.vertex_count();
    auto slot = [&](int j) { return j == 0 ? v : n + j - 1; };
    Pairs p;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u != v && ed.v != v)
            add(p, ed.u, ed.v);
    }
    for (int j = 0; j < d; ++j) {
        add(p, slot(j), g.other_end(inc[static_cast<std::size_t>(j)], v));
        add(p, slot(j), slot((j + 1) % d));
    }
    return Multigraph::from_pairs(n + d - 1, p);
}

Multigraph three_cut_composite()
{
    // Separator u=0, v=1, w=2.
    // Odd component {3,4,5}: an octahedron-shaped piece around the separator.
    // Even components {6,7} and {8,9}, each a K5-minus-two-edges piece.
    Pairs p;
    add(p, 0, 3, 2);
    add(p, 1, 4, 2);
    add(p, 2, 5, 2);
    add(p, 0, 5);
    add(p, 1, 3);
    add(p, 2, 4);
    add(p, 3, 4, 2);
    add(p, 3, 5, 2);
    add(p, 4, 5, 2);

    add(p, 6, 0, 2);
    add(p, 6, 1);
    add(p, 7, 1);
    add(p, 7, 2, 2);
    add(p, 6, 7, 4);

    add(p, 8, 1, 2);
    add(p, 8, 2);
    add(p, 9, 2);
    add(p, 9, 0, 2);
    add(p, 8, 9, 4);
    return Multigraph::from_pairs(10, p);
}

namespace {

const std::map<std::string, Multigraph (*)()>& registry()
{
    static const std::map<std::string, Multigraph (*)()> table{
        {"petersen", &petersen},
        {"wagner-v8", &wagner_v8},
        {"k33", [] { return complete_bipartite(3, 3); }},
        {"k4", [] { return complete(4); }},
        {"k5", [] { return complete(5); }},
        {"prism", [] { return prism(); }},
        {"cube", &cube},
        {"octahedron", &octahedron},
        {"dodecahedron", &dodecahedron},
        {"c4", [] { return cycle(4); }},
        {"c4-2121", [] { return c4(2, 1, 2, 1); }},
        {"c4-doubled", [] { return c4(2, 2, 2, 2); }},
        {"bridge-cubic", &bridged_cubic},
        {"k4-doubled", [] { return scaled(complete(4), 2); }},
        {"three-cut-composite", &three_cut_composite},
        {"mobius-10", [] { return mobius_ladder(10); }},
    };
    return table;
}

} // namespace

std::vector<std::string> names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

std::optional<Multigraph> by_name(const std::string& name)
{
    auto it = registry().find(name);
    if (it == registry().end())
        return std::nullopt;
    return it->second();
}

} // namespace rgraph::fixtures
