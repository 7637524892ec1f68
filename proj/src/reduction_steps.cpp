#include "rgraph/reduction.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/lifting.hpp"
#include "rgraph/minor_topology.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rgraph {

namespace {

/// Inverse of a partial edge map g -> h: h edge -> g edge, -1 for edges that
/// have no preimage.
std::vector<EdgeId> invert(const std::vector<std::optional<EdgeId>>& forward, int h_edges)
{
    std::vector<EdgeId> back(static_cast<std::size_t>(h_edges), -1);
    for (std::size_t e = 0; e < forward.size(); ++e)
        if (forward[e])
            back[static_cast<std::size_t>(*forward[e])] = static_cast<EdgeId>(e);
    return back;
}

Matching as_matching(const Multigraph& g, std::vector<EdgeId> ids, const char* what)
{
    auto m = make_matching(g, std::move(ids));
    if (!m)
        throw InternalDefect(std::string(what) + ": combined edges do not form a matching");
    return *m;
}

void require_valid(const Multigraph& g, const PMCover& cover, const char* what)
{
    CoverCheck check = validate_tr_pm(g, cover);
    if (!check.ok)
        throw InternalDefect(std::string(what) + ": " + check.reasons.front());
}

void require_input_cover(const Multigraph& g, const PMCover& cover, const char* what)
{
    CoverCheck check = validate_tr_pm(g, cover);
    if (!check.ok)
        throw PreconditionViolation(std::string(what) + ": " + check.reasons.front());
}

bool contains_edge(const Matching& m, EdgeId e)
{
    return std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), e);
}

} // namespace

PMCover combine_across_tight_cut(const Multigraph& g, const EdgeCut& cut_in, const PMCover& cover_inside,
                                 const PMCover& cover_outside)
{
    auto r = g.regular_degree();
    if (!r)
        throw PreconditionViolation("combine_across_tight_cut needs a regular graph");
    EdgeCut cut = boundary(g, cut_in.side, *r);
    if (!cut.nontrivial_tight.value_or(false))
        throw PreconditionViolation("combine_across_tight_cut needs a non-trivial tight cut");
    if (cover_inside.t != cover_outside.t || cover_inside.r != cover_outside.r)
        throw PreconditionViolation("covers on the two sides use different t or r");
    int t = cover_inside.t;

    Contraction inside = contract(g, complement(g.vertex_count(), cut.side));
    Contraction outside = contract(g, cut.side);
    require_input_cover(inside.graph, cover_inside, "inside cover");
    require_input_cover(outside.graph, cover_outside, "outside cover");
    auto back_in = invert(inside.edge_map, inside.graph.edge_count());
    auto back_out = invert(outside.edge_map, outside.graph.edge_count());

    // Bucket each side's matchings by the cut edge they use.
    std::map<EdgeId, std::vector<std::size_t>> by_edge_in, by_edge_out;
    auto bucket = [&](const PMCover& cover, const Contraction& con, const std::vector<EdgeId>& back,
                      std::map<EdgeId, std::vector<std::size_t>>& out) {
        for (std::size_t i = 0; i < cover.matchings.size(); ++i) {
            EdgeId used = -1;
            for (EdgeId e : con.graph.incident(con.contracted_vertex))
                if (contains_edge(cover.matchings[i], e))
                    used = back[static_cast<std::size_t>(e)];
            out[used].push_back(i);
        }
    };
    bucket(cover_inside, inside, back_in, by_edge_in);
    bucket(cover_outside, outside, back_out, by_edge_out);

    PMCover result;
    result.t = t;
    result.r = cover_inside.r;
    for (EdgeId e : cut.boundary) {
        const auto& ins = by_edge_in[e];
        const auto& outs = by_edge_out[e];
        if (static_cast<int>(ins.size()) != t || static_cast<int>(outs.size()) != t)
            throw InternalDefect("cut edge is not used exactly t times on each side");
        for (int j = 0; j < t; ++j) {
            std::vector<EdgeId> ids;
            for (EdgeId h : cover_inside.matchings[ins[static_cast<std::size_t>(j)]].edge_ids)
                ids.push_back(back_in[static_cast<std::size_t>(h)]);
            for (EdgeId h : cover_outside.matchings[outs[static_cast<std::size_t>(j)]].edge_ids) {
                EdgeId ge = back_out[static_cast<std::size_t>(h)];
                if (ge != e)
                    ids.push_back(ge);
            }
            result.matchings.push_back(as_matching(g, std::move(ids), "tight-cut combination"));
        }
    }
    require_valid(g, result, "tight-cut combination");
    return result;
}

PMCover direct_c4_cover(const Multigraph& g, int t, int r)
{
    Multigraph s = underlying_simple(g);
    if (!is_isomorphic_to(s, fixtures::cycle(4)))
        throw PreconditionViolation("direct_c4_cover needs an underlying 4-cycle");
    if (!verify_r_graph(g, r).is_r_graph)
        throw PreconditionViolation("direct_c4_cover needs an r-graph");
    // Walk the cycle from vertex 0.
    std::vector<Vertex> order{0};
    Vertex prev = -1;
    while (order.size() < 4) {
        Vertex cur = order.back();
        for (Vertex w : s.neighbours(cur))
            if (w != prev && w != order.front()) {
                prev = cur;
                order.push_back(w);
                break;
            }
    }
    std::array<std::vector<EdgeId>, 4> sides;
    for (int i = 0; i < 4; ++i)
        sides[static_cast<std::size_t>(i)] =
            g.edges_between(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % 4)]);
    if (sides[0].size() != sides[2].size() || sides[1].size() != sides[3].size())
        throw InternalDefect("opposite sides of an r-regular 4-cycle differ in multiplicity");

    PMCover cover;
    cover.t = t;
    cover.r = r;
    for (std::size_t pair = 0; pair < 2; ++pair)
        for (std::size_t i = 0; i < sides[pair].size(); ++i) {
            Matching m = as_matching(g, {sides[pair][i], sides[pair + 2][i]}, "4-cycle coloring");
            for (int rep = 0; rep < t; ++rep)
                cover.matchings.push_back(m);
        }
    require_valid(g, cover, "4-cycle coloring");
    return cover;
}

ThreeCutSide build_three_cut_side(const Multigraph& g, const VertexSet& separator, const VertexSet& component, int r)
{
    if (separator.size() != 3)
        throw InvalidArgument("three-cut side needs a 3-vertex separator");
    ThreeCutSide side;
    side.component = normalize(component);
    Vertex u = separator[0], v = separator[1], w = separator[2];
    auto count_to = [&](Vertex s) {
        int c = 0;
        for (Vertex x : side.component)
            c += g.multiplicity(x, s);
        return c;
    };
    side.a = count_to(u);
    side.b = count_to(v);
    side.c = count_to(w);
    int twice_d = side.a + side.b - side.c;
    int twice_h = -side.a + side.b + side.c;
    int twice_k = side.a - side.b + side.c;
    if (twice_d < 0 || twice_h < 0 || twice_k < 0 || twice_d % 2 || twice_h % 2 || twice_k % 2)
        throw InternalDefect("3-cut side counts give no non-negative integer d, h, k");
    side.d = twice_d / 2;
    side.h = twice_h / 2;
    side.k = twice_k / 2;
    if (side.a != side.d + side.k || side.b != side.d + side.h || side.c != side.h + side.k)
        throw InternalDefect("3-cut side identities fail");

    Contraction con = contract(g, side.component);
    auto local = [&](Vertex x) { return con.vertex_map[static_cast<std::size_t>(x)]; };
    LiftingPlan plan = lifting_plan_from_pairs(
        g, side.component, r,
        {{local(u), local(v), side.d}, {local(v), local(w), side.h}, {local(w), local(u), side.k}}, true);
    LiftResult lifted = apply_lifting(g, plan);
    side.reduced = std::move(lifted.graph);
    side.edge_map = std::move(lifted.edge_map);
    side.added = std::move(lifted.added);
    for (int type = 0; type < 3; ++type) {
        int count = type == 0 ? side.d : type == 1 ? side.h : side.k;
        for (int i = 0; i < count; ++i)
            side.added_type.push_back(type);
    }
    if (!is_connected(side.reduced) || !verify_r_graph(side.reduced, r).is_r_graph)
        throw InternalDefect("3-cut side is not a connected r-graph after lifting");
    return side;
}

PMCover merge_three_cut(const Multigraph& g, const ThreeCutSplitData& split, const PMCover& cover1,
                        const PMCover& cover2)
{
    const ThreeCutSide& s1 = split.sides[0];
    const ThreeCutSide& s2 = split.sides[1];
    require_input_cover(s1.reduced, cover1, "first side cover");
    require_input_cover(s2.reduced, cover2, "second side cover");
    if (cover1.t != cover2.t || cover1.r != cover2.r)
        throw PreconditionViolation("side covers use different t or r");
    int t = cover1.t;
    const VertexSet& sep = split.separator;
    auto back1 = invert(s1.edge_map, s1.reduced.edge_count());
    auto back2 = invert(s2.edge_map, s2.reduced.edge_count());

    // Edges of g in E(G_1) and in the boundary of V(G_1).
    std::vector<char> near_g1(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (contains(s1.component, g.edge(e).u) || contains(s1.component, g.edge(e).v))
            near_g1[static_cast<std::size_t>(e)] = 1;

    auto pair_type = [&](Vertex p, Vertex q) {
        int i = static_cast<int>(std::find(sep.begin(), sep.end(), p) - sep.begin());
        int j = static_cast<int>(std::find(sep.begin(), sep.end(), q) - sep.begin());
        if (i > j)
            std::swap(i, j);
        if (i == 0 && j == 1)
            return 0;
        if (i == 1 && j == 2)
            return 1;
        return 2;
    };

    // Restrictions of the second side's matchings, grouped by the separator
    // pair they saturate (3 = none).
    std::array<std::vector<std::vector<EdgeId>>, 4> pieces;
    for (const Matching& m : cover2.matchings) {
        std::vector<EdgeId> kept;
        std::vector<Vertex> touched;
        for (EdgeId h : m.edge_ids) {
            EdgeId ge = back2[static_cast<std::size_t>(h)];
            if (ge < 0 || !near_g1[static_cast<std::size_t>(ge)])
                continue;
            kept.push_back(ge);
            for (Vertex x : {g.edge(ge).u, g.edge(ge).v})
                if (contains(sep, x))
                    touched.push_back(x);
        }
        if (touched.size() == 2)
            pieces[static_cast<std::size_t>(pair_type(touched[0], touched[1]))].push_back(std::move(kept));
        else if (touched.empty())
            pieces[3].push_back(std::move(kept));
        else
            throw InternalDefect("restricted matching meets the boundary of the even component an odd number of times");
    }

    std::array<std::vector<std::size_t>, 4> slots;
    for (std::size_t i = 0; i < cover1.matchings.size(); ++i) {
        int type = 3;
        for (std::size_t a = 0; a < s1.added.size(); ++a)
            if (contains_edge(cover1.matchings[i], s1.added[a])) {
                if (type != 3)
                    throw InternalDefect("matching uses two added separator edges");
                type = s1.added_type[a];
            }
        slots[static_cast<std::size_t>(type)].push_back(i);
    }
    std::array<int, 3> expected{s1.d, s1.h, s1.k};
    for (std::size_t type = 0; type < 4; ++type) {
        if (slots[type].size() != pieces[type].size())
            throw InternalDefect("boundary behaviour counts differ between the two sides");
        if (type < 3 && static_cast<int>(slots[type].size()) != t * expected[type])
            throw InternalDefect("separator pair is saturated a number of times other than t times its edge count");
    }

    PMCover result;
    result.t = t;
    result.r = cover1.r;
    for (std::size_t type = 0; type < 4; ++type) {
        for (std::size_t j = 0; j < slots[type].size(); ++j) {
            std::vector<EdgeId> ids = pieces[type][j];
            for (EdgeId h : cover1.matchings[slots[type][j]].edge_ids) {
                EdgeId ge = back1[static_cast<std::size_t>(h)];
                if (ge >= 0)
                    ids.push_back(ge);
            }
            result.matchings.push_back(as_matching(g, std::move(ids), "3-cut merge"));
        }
    }
    require_valid(g, result, "3-cut merge");
    return result;
}

long crossing_potential(const Multigraph& g)
{
    long best = 0;
    bool any = false;
    for (const CrossingCertificate& c : crossing_certificates(g)) {
        long p = static_cast<long>(g.multiplicity(c.x, c.y)) * g.multiplicity(c.u, c.v);
        if (!any || p < best)
            best = p;
        any = true;
    }
    if (!any && !is_planar(g))
        throw PreconditionViolation("graph has crossing number above one");
    return best;
}

CrossingSwapData build_crossing_swap(const Multigraph& g, Vertex x, Vertex y, Vertex u, Vertex v)
{
    CrossingSwapData swap;
    swap.x = x;
    swap.y = y;
    swap.u = u;
    swap.v = v;
    auto xy = g.edges_between(x, y);
    auto uv = g.edges_between(u, v);
    if (xy.empty() || uv.empty())
        throw PreconditionViolation("crossing pair is not a pair of edges");
    swap.e_xy = xy.front();
    swap.e_uv = uv.front();
    swap.potential = static_cast<long>(xy.size()) * static_cast<long>(uv.size());

    std::vector<std::optional<EdgeId>> drop_map;
    std::vector<EdgeId> removed{swap.e_xy, swap.e_uv};
    Multigraph reduced = without_edges(g, removed, &drop_map);
    std::vector<EdgeId> old_to_new, added;
    std::vector<std::pair<Vertex, Vertex>> extra{{x, u}, {y, v}};
    swap.swapped = with_added_edges(reduced, extra, &old_to_new, &added);
    swap.f = added[0];
    swap.f_prime = added[1];
    swap.edge_map.assign(static_cast<std::size_t>(g.edge_count()), std::nullopt);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto mid = drop_map[static_cast<std::size_t>(e)])
            swap.edge_map[static_cast<std::size_t>(e)] = old_to_new[static_cast<std::size_t>(*mid)];
    return swap;
}

PMCover repair_crossing(const Multigraph& g, CrossingSwapData& swap, const PMCover& child_cover)
{
    require_input_cover(swap.swapped, child_cover, "swapped-graph cover");
    auto back = invert(swap.edge_map, swap.swapped.edge_count());
    auto to_g = [&](const Matching& m, EdgeId skip1, EdgeId skip2) {
        std::vector<EdgeId> ids;
        for (EdgeId h : m.edge_ids)
            if (h != skip1 && h != skip2)
                ids.push_back(back[static_cast<std::size_t>(h)]);
        return ids;
    };

    PMCover result;
    result.t = child_cover.t;
    result.r = child_cover.r;
    std::vector<std::size_t> only_f, only_f_prime;
    for (std::size_t i = 0; i < child_cover.matchings.size(); ++i) {
        const Matching& m = child_cover.matchings[i];
        bool has_f = contains_edge(m, swap.f);
        bool has_fp = contains_edge(m, swap.f_prime);
        if (has_f && has_fp) {
            auto ids = to_g(m, swap.f, swap.f_prime);
            ids.push_back(swap.e_xy);
            ids.push_back(swap.e_uv);
            result.matchings.push_back(as_matching(g, std::move(ids), "crossing repair"));
        } else if (!has_f && !has_fp) {
            result.matchings.push_back(as_matching(g, to_g(m, -1, -1), "crossing repair"));
        } else if (has_f) {
            only_f.push_back(i);
        } else {
            only_f_prime.push_back(i);
        }
    }
    swap.l = static_cast<int>(only_f.size());
    swap.l_prime = static_cast<int>(only_f_prime.size());
    swap.chain_ends.clear();
    if (swap.l != swap.l_prime)
        throw InternalDefect("conflicting matchings are unbalanced");

    for (std::size_t i = 0; i < only_f.size(); ++i) {
        // n1 misses x and u, n2 misses y and v.
        Matching n1 = as_matching(g, to_g(child_cover.matchings[only_f[i]], swap.f, -1), "crossing repair");
        Matching n2 = as_matching(g, to_g(child_cover.matchings[only_f_prime[i]], swap.f_prime, -1), "crossing repair");
        auto chain = kempe_chain_at(g, n1, n2, swap.x);
        if (!chain || chain->is_cycle)
            throw InternalDefect("no alternating path starts at x");
        Vertex end = chain->endpoints[0] == swap.x ? chain->endpoints[1] : chain->endpoints[0];
        auto [s1, s2] = kempe_switch(g, n1, n2, *chain);
        std::vector<EdgeId> a = s1.edge_ids, b = s2.edge_ids;
        if (end == swap.u) {
            b.push_back(swap.e_xy);
            b.push_back(swap.e_uv);
            swap.chain_ends += 'u';
        } else if (end == swap.v) {
            a.push_back(swap.e_uv);
            b.push_back(swap.e_xy);
            swap.chain_ends += 'v';
        } else {
            throw InternalDefect("alternating path from x ends at y, which planarity rules out");
        }
        result.matchings.push_back(as_matching(g, std::move(a), "crossing repair"));
        result.matchings.push_back(as_matching(g, std::move(b), "crossing repair"));
    }
    require_valid(g, result, "crossing repair");
    return result;
}

} // namespace rgraph
