#include "rgraph/minor_topology.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace rgraph {

bool is_planar(const Multigraph& g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    int n = g.vertex_count();
    if (n <= 4)
        return true;
    BoostGraph bg(static_cast<std::size_t>(n));
    Multigraph s = underlying_simple(g);
    if (s.edge_count() > 3 * n - 6)
        return false;
    for (const Edge& e : s.edges())
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

const char* to_string(Forbidden f)
{
    return f == Forbidden::K5 ? "K5" : "K33";
}

const char* to_string(CrossingVerdict v)
{
    switch (v) {
    case CrossingVerdict::Planar:
        return "planar";
    case CrossingVerdict::OneCrossing:
        return "one-crossing";
    case CrossingVerdict::More:
        return "more";
    }
    return "?";
}

const char* to_string(PieceKind k)
{
    switch (k) {
    case PieceKind::Planar:
        return "planar";
    case PieceKind::WagnerV8:
        return "wagner-V8";
    case PieceKind::K5:
        return "K5";
    case PieceKind::Split:
        return "split";
    }
    return "?";
}

} // namespace rgraph
