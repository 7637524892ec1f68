#include "rgraph/reduction.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/minor_topology.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <algorithm>
#include <sstream>

namespace rgraph {

OracleGap::OracleGap(Multigraph g, int t_, int r_)
    : std::runtime_error("planar oracle found no (" + std::to_string(t_) + "," + std::to_string(r_) +
                         ")-PM for a planar r-graph"),
      instance(std::move(g)), t(t_), r(r_)
{
}

PlanarOracle PlanarOracle::exact_search(SearchBudget budget)
{
    return injected([budget](const Multigraph& g, int t, int r) { return find_tr_pm(g, t, r, budget); },
                    "exact-search");
}

PlanarOracle PlanarOracle::table(std::vector<std::pair<Multigraph, PMCover>> entries)
{
    return injected(
        [entries = std::move(entries)](const Multigraph& g, int t, int r) -> std::optional<PMCover> {
            for (const auto& [graph, cover] : entries)
                if (graph == g && cover.t == t && cover.r == r)
                    return cover;
            return std::nullopt;
        },
        "table");
}

PlanarOracle PlanarOracle::injected(Solver solver, std::string name)
{
    PlanarOracle o;
    o.solver_ = std::move(solver);
    o.name_ = std::move(name);
    return o;
}

PMCover PlanarOracle::solve(const Multigraph& g, int t, int r) const
{
    if (!is_planar(g))
        throw PreconditionViolation("planar oracle called on a non-planar graph");
    ++*calls_;
    auto cover = solver_(g, t, r);
    if (!cover)
        throw OracleGap(g, t, r);
    CoverCheck check = validate_tr_pm(g, *cover);
    if (!check.ok)
        throw InternalDefect("planar oracle returned an invalid cover: " + check.reasons.front());
    return *cover;
}

const char* to_string(StepKind k)
{
    switch (k) {
    case StepKind::TightCutSplit:
        return "tight-cut-split";
    case StepKind::TwoCutC4Direct:
        return "two-cut-C4-direct";
    case StepKind::ThreeCutSplit:
        return "three-cut-split";
    case StepKind::PlanarOracle:
        return "planar-oracle";
    case StepKind::V8Coloring:
        return "V8-coloring";
    case StepKind::K33Coloring:
        return "K33-coloring";
    case StepKind::CrossingSwap:
        return "crossing-swap";
    }
    return "?";
}

const char* to_string(ReductionMode m)
{
    switch (m) {
    case ReductionMode::K5Free:
        return "k5free";
    case ReductionMode::K33Free:
        return "k33free";
    case ReductionMode::CrossingOne:
        return "cr1";
    }
    return "?";
}

namespace {

class Engine {
public:
    Engine(ReductionMode mode, int t, int r, const PlanarOracle& oracle) : oracle_(oracle)
    {
        trace_.mode = mode;
        trace_.t = t;
        trace_.r = r;
    }

    ReductionResult run(const Multigraph& g)
    {
        trace_.root = solve(g);
        ReductionResult out;
        out.cover = trace_.nodes[static_cast<std::size_t>(trace_.root)].cover;
        out.trace = std::move(trace_);
        return out;
    }

private:
    int t() const { return trace_.t; }
    int r() const { return trace_.r; }

    int add(TraceNode node)
    {
        trace_.nodes.push_back(std::move(node));
        return static_cast<int>(trace_.nodes.size()) - 1;
    }

    const PMCover& cover_of(int id) const { return trace_.nodes[static_cast<std::size_t>(id)].cover; }

    int solve(const Multigraph& g)
    {
        if (!is_connected(g) || !verify_r_graph(g, r()).is_r_graph)
            throw InternalDefect("reduction reached a graph that is not a connected r-graph");
        if (trace_.mode == ReductionMode::CrossingOne)
            return solve_crossing(g);
        return solve_minor_free(g);
    }

    int leaf(const Multigraph& g, StepKind kind, PMCover cover)
    {
        TraceNode node;
        node.kind = kind;
        node.graph = g;
        node.cover = std::move(cover);
        return add(std::move(node));
    }

    int split_tight(const Multigraph& g, const EdgeCut& cut)
    {
        Multigraph inside = contract(g, complement(g.vertex_count(), cut.side)).graph;
        Multigraph outside = contract(g, cut.side).graph;
        int a = solve(inside);
        int b = solve(outside);
        TraceNode node;
        node.kind = StepKind::TightCutSplit;
        node.graph = g;
        node.cut = cut;
        node.children = {a, b};
        node.cover = combine_across_tight_cut(g, cut, cover_of(a), cover_of(b));
        return add(std::move(node));
    }

    int color_leaf(const Multigraph& g, StepKind kind)
    {
        auto coloring = edge_color(g, r());
        if (!coloring)
            throw InternalDefect(std::string(to_string(kind)) + ": graph is not of class 1");
        return leaf(g, kind, cover_from_coloring(g, *coloring, t(), r()));
    }

    int solve_minor_free(const Multigraph& g)
    {
        // (a) non-trivial tight cut.
        if (auto cut = find_nontrivial_tight_cut(g, r()))
            return split_tight(g, *cut);

        Multigraph s = underlying_simple(g);
        // (b) 2-vertex-cut: without a tight cut only the 4-cycle remains.
        if (!find_vertex_cuts(s, 1).empty())
            throw InternalDefect("r-graph with a cut vertex");
        auto two_cuts = find_vertex_cuts(s, 2);
        if (!two_cuts.empty()) {
            TwoCutClassification cls = classify_two_cut(g, r(), two_cuts.front());
            if (cls.tag != CutCase::UnderlyingC4)
                throw InternalDefect("2-vertex-cut classified as " + std::string(to_string(cls.tag)) +
                                     " although no tight cut exists");
            return leaf(g, StepKind::TwoCutC4Direct, direct_c4_cover(g, t(), r()));
        }

        // (c) planar.
        if (is_planar(s))
            return leaf(g, StepKind::PlanarOracle, oracle_.solve(g, t(), r()));

        if (trace_.mode == ReductionMode::K33Free)
            throw InternalDefect("3-connected K3,3-minor-free r-graph is not planar");

        // (d) Wagner graph.
        if (is_isomorphic_to(s, fixtures::wagner_v8()))
            return color_leaf(g, StepKind::V8Coloring);

        // (e) 3-vertex-cut with at least three components.
        auto split = find_splittable_three_cut(g);
        if (!split)
            throw InternalDefect("no 3-vertex-cut with three components and K5-minor-free augmentation");
        const VertexCut& cut = split->cut;
        ThreeCutClassification three = classify_three_cut(g, r(), cut);
        if (three.tag == CutCase::UnderlyingK33)
            return color_leaf(g, StepKind::K33Coloring);
        if (three.tag != CutCase::NotApplicable)
            throw InternalDefect("3-vertex-cut yields a tight cut that the search missed");

        std::vector<VertexSet> odd, even;
        for (const VertexSet& comp : cut.components)
            (comp.size() % 2 ? odd : even).push_back(comp);
        if (odd.size() != 1)
            throw InternalDefect("3-vertex-cut leaves " + std::to_string(odd.size()) +
                                 " odd components where exactly one is expected");
        if (even.size() < 2)
            throw InternalDefect("3-vertex-cut leaves fewer than two even components");

        ThreeCutSplitData data;
        data.separator = cut.separator;
        data.odd_component = odd.front();
        for (std::size_t i = 0; i < 2; ++i) {
            data.sides[i] = build_three_cut_side(g, cut.separator, even[i], r());
            if (has_k5_minor(data.sides[i].reduced))
                throw InternalDefect("3-cut side acquired a K5 minor");
        }
        int a = solve(data.sides[0].reduced);
        int b = solve(data.sides[1].reduced);
        TraceNode node;
        node.kind = StepKind::ThreeCutSplit;
        node.graph = g;
        node.children = {a, b};
        node.cover = merge_three_cut(g, data, cover_of(a), cover_of(b));
        node.three_cut = std::move(data);
        return add(std::move(node));
    }

    int solve_crossing(const Multigraph& g)
    {
        if (is_planar(g))
            return leaf(g, StepKind::PlanarOracle, oracle_.solve(g, t(), r()));

        auto certs = crossing_certificates(g);
        if (certs.empty())
            throw InternalDefect("graph lost its one-crossing drawing during reduction");
        const CrossingCertificate* best = nullptr;
        long best_potential = 0;
        for (const CrossingCertificate& c : certs) {
            long p = static_cast<long>(g.multiplicity(c.x, c.y)) * g.multiplicity(c.u, c.v);
            if (!best || p < best_potential) {
                best = &c;
                best_potential = p;
            }
        }

        auto xy = g.edges_between(best->x, best->y);
        auto uv = g.edges_between(best->u, best->v);
        for (const EdgeCut& cut : nontrivial_tight_cuts(g, r())) {
            auto in_cut = [&](EdgeId e) { return std::binary_search(cut.boundary.begin(), cut.boundary.end(), e); };
            if (std::all_of(xy.begin(), xy.end(), in_cut) && std::all_of(uv.begin(), uv.end(), in_cut))
                return split_tight(g, cut);
        }

        CrossingSwapData swap = build_crossing_swap(g, best->x, best->y, best->u, best->v);
        if (!verify_r_graph(swap.swapped, r()).is_r_graph)
            throw InternalDefect("swapped graph is not an r-graph");
        swap.child_potential = crossing_potential(swap.swapped);
        if (swap.child_potential >= swap.potential)
            throw InternalDefect("crossing potential did not decrease");
        int child = solve(swap.swapped);
        TraceNode node;
        node.kind = StepKind::CrossingSwap;
        node.graph = g;
        node.children = {child};
        node.cover = repair_crossing(g, swap, cover_of(child));
        node.crossing = std::move(swap);
        return add(std::move(node));
    }

    const PlanarOracle& oracle_;
    ReductionTrace trace_;
};

void check_entry(const Multigraph& g, int t, int r)
{
    if (t < 1)
        throw InvalidArgument("t must be at least 1");
    if (!is_connected(g))
        throw PreconditionViolation("reduction needs a connected graph");
    if (!verify_r_graph(g, r).is_r_graph)
        throw PreconditionViolation("input is not an r-graph");
}

bool same_cover(const PMCover& a, const PMCover& b)
{
    return a.t == b.t && a.r == b.r && a.matchings == b.matchings;
}

} // namespace

ReductionResult reduce(const Multigraph& g, int t, int r, ReductionMode mode, const PlanarOracle& oracle)
{
    check_entry(g, t, r);
    switch (mode) {
    case ReductionMode::K5Free:
        if (has_k5_minor(g))
            throw PreconditionViolation("input has a K5 minor");
        break;
    case ReductionMode::K33Free:
        if (has_k33_minor(g))
            throw PreconditionViolation("input has a K3,3 minor");
        break;
    case ReductionMode::CrossingOne:
        if (crossing_at_most_one(g).verdict == CrossingVerdict::More)
            throw PreconditionViolation("input has crossing number above one");
        break;
    }
    return Engine(mode, t, r, oracle).run(g);
}

ReductionResult reduce_k5_free(const Multigraph& g, int t, int r, const PlanarOracle& oracle)
{
    return reduce(g, t, r, ReductionMode::K5Free, oracle);
}

ReductionResult reduce_k33_free(const Multigraph& g, int t, int r, const PlanarOracle& oracle)
{
    return reduce(g, t, r, ReductionMode::K33Free, oracle);
}

ReductionResult reduce_crossing_one(const Multigraph& g, int t, int r, const PlanarOracle& oracle)
{
    return reduce(g, t, r, ReductionMode::CrossingOne, oracle);
}

namespace {

PMCover replay_node(const ReductionTrace& trace, int id, std::vector<std::optional<PMCover>>& memo)
{
    auto& slot = memo.at(static_cast<std::size_t>(id));
    if (slot)
        return *slot;
    const TraceNode& node = trace.nodes.at(static_cast<std::size_t>(id));
    PMCover out;
    switch (node.kind) {
    case StepKind::PlanarOracle:
    case StepKind::V8Coloring:
    case StepKind::K33Coloring:
    case StepKind::TwoCutC4Direct:
        out = node.cover;
        break;
    case StepKind::TightCutSplit:
        out = combine_across_tight_cut(node.graph, node.cut.value(), replay_node(trace, node.children.at(0), memo),
                                       replay_node(trace, node.children.at(1), memo));
        break;
    case StepKind::ThreeCutSplit:
        out = merge_three_cut(node.graph, node.three_cut.value(), replay_node(trace, node.children.at(0), memo),
                              replay_node(trace, node.children.at(1), memo));
        break;
    case StepKind::CrossingSwap: {
        CrossingSwapData swap = node.crossing.value();
        out = repair_crossing(node.graph, swap, replay_node(trace, node.children.at(0), memo));
        break;
    }
    }
    slot = out;
    return out;
}

/// Checks that a node's children are the graphs its step derives and that a
/// leaf's graph has the shape its step needs.
std::string step_shape_error(const ReductionTrace& trace, const TraceNode& node)
{
    auto child = [&](std::size_t k) -> const Multigraph& {
        return trace.nodes.at(static_cast<std::size_t>(node.children.at(k))).graph;
    };
    std::size_t want_children = 0;
    Multigraph s = underlying_simple(node.graph);
    switch (node.kind) {
    case StepKind::PlanarOracle:
        if (!is_planar(node.graph))
            return "oracle leaf is not planar";
        break;
    case StepKind::V8Coloring:
        if (!is_isomorphic_to(s, fixtures::wagner_v8()))
            return "V8 leaf is not the Wagner graph";
        break;
    case StepKind::K33Coloring:
        if (!is_isomorphic_to(s, fixtures::complete_bipartite(3, 3)))
            return "K3,3 leaf is not K3,3";
        break;
    case StepKind::TwoCutC4Direct:
        if (!is_isomorphic_to(s, fixtures::cycle(4)))
            return "4-cycle leaf is not a 4-cycle";
        break;
    case StepKind::TightCutSplit: {
        want_children = 2;
        if (!node.cut || node.children.size() != 2)
            return "tight-cut split lacks its cut or children";
        EdgeCut cut = boundary(node.graph, node.cut->side, trace.r);
        if (!cut.nontrivial_tight.value_or(false))
            return "recorded cut is not a non-trivial tight cut";
        if (!(child(0) == contract(node.graph, complement(node.graph.vertex_count(), cut.side)).graph) ||
            !(child(1) == contract(node.graph, cut.side).graph))
            return "children are not the two contractions";
        break;
    }
    case StepKind::ThreeCutSplit:
        want_children = 2;
        if (!node.three_cut || node.children.size() != 2)
            return "three-cut split lacks its data or children";
        for (std::size_t k = 0; k < 2; ++k)
            if (!(child(k) == node.three_cut->sides[k].reduced))
                return "children are not the reduced sides";
        break;
    case StepKind::CrossingSwap:
        want_children = 1;
        if (!node.crossing || node.children.size() != 1)
            return "crossing swap lacks its data or child";
        if (!(child(0) == node.crossing->swapped))
            return "child is not the swapped graph";
        break;
    }
    if (node.children.size() != want_children)
        return "wrong number of children";
    return {};
}

} // namespace

PMCover ReductionTrace::replay() const
{
    std::vector<std::optional<PMCover>> memo(nodes.size());
    return replay_node(*this, root, memo);
}

bool ReductionTrace::check(std::string* why) const
{
    auto fail = [&](const std::string& reason) {
        if (why)
            *why = reason;
        return false;
    };
    if (nodes.empty())
        return fail("empty trace");
    try {
        std::vector<std::optional<PMCover>> memo(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const TraceNode& node = nodes[i];
            CoverCheck c = validate_tr_pm(node.graph, node.cover);
            if (!c.ok)
                return fail("node " + std::to_string(i) + ": " + c.reasons.front());
            if (!same_cover(replay_node(*this, static_cast<int>(i), memo), node.cover))
                return fail("node " + std::to_string(i) + ": replay differs from the stored cover");
            if (std::string err = step_shape_error(*this, node); !err.empty())
                return fail("node " + std::to_string(i) + ": " + err);
            if (node.three_cut) {
                for (const ThreeCutSide& s : node.three_cut->sides)
                    if (s.a != s.d + s.k || s.b != s.d + s.h || s.c != s.h + s.k || s.d < 0 || s.h < 0 || s.k < 0 ||
                        2 * s.d != s.a + s.b - s.c || 2 * s.h != -s.a + s.b + s.c || 2 * s.k != s.a - s.b + s.c)
                        return fail("node " + std::to_string(i) + ": 3-cut arithmetic fails");
            }
            if (node.crossing) {
                const CrossingSwapData& s = *node.crossing;
                if (s.child_potential >= s.potential)
                    return fail("node " + std::to_string(i) + ": crossing potential did not decrease");
                if (s.l != s.l_prime)
                    return fail("node " + std::to_string(i) + ": conflicting matchings unbalanced");
                CrossingSwapData again = s;
                repair_crossing(node.graph, again, nodes.at(static_cast<std::size_t>(node.children.at(0))).cover);
                if (again.l != s.l || again.l_prime != s.l_prime || again.chain_ends != s.chain_ends)
                    return fail("node " + std::to_string(i) + ": recorded conflicting pairs differ from a recount");
            }
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return true;
}

std::string ReductionTrace::to_dot() const
{
    std::ostringstream out;
    out << "digraph reduction {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TraceNode& n = nodes[i];
        out << "  n" << i << " [label=\"" << to_string(n.kind) << "\\nn=" << n.graph.vertex_count()
            << " m=" << n.graph.edge_count() << "\"];\n";
        for (int c : n.children)
            out << "  n" << i << " -> n" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rgraph
