#pragma once

#include "rgraph/multigraph.hpp"
#include "rgraph/pm_cover.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgraph {

/// The planar oracle found no (t,r)-PM for a planar r-graph. Carries the
/// instance, which would refute the planar case of the conjecture.
class OracleGap : public std::runtime_error {
public:
    OracleGap(Multigraph instance, int t, int r);

    Multigraph instance;
    int t;
    int r;
};

/// Source of covers for planar r-graphs.
class PlanarOracle {
public:
    using Solver = std::function<std::optional<PMCover>(const Multigraph&, int t, int r)>;

    /// Default: exact search with find_tr_pm.
    static PlanarOracle exact_search(SearchBudget budget = {});
    /// Covers looked up by exact graph equality; unknown graphs count as gaps.
    static PlanarOracle table(std::vector<std::pair<Multigraph, PMCover>> entries);
    static PlanarOracle injected(Solver solver, std::string name);

    /// Asserts planarity (PreconditionViolation otherwise), asks the strategy
    /// and validates its answer. A missing cover raises OracleGap; an invalid
    /// one raises InternalDefect.
    PMCover solve(const Multigraph& g, int t, int r) const;

    const std::string& name() const { return name_; }
    std::size_t calls() const { return *calls_; }

private:
    Solver solver_;
    std::string name_;
    std::shared_ptr<std::size_t> calls_ = std::make_shared<std::size_t>(0);
};

enum class StepKind {
    TightCutSplit,
    TwoCutC4Direct,
    ThreeCutSplit,
    PlanarOracle,
    V8Coloring,
    K33Coloring,
    CrossingSwap,
};

const char* to_string(StepKind k);

enum class ReductionMode { K5Free, K33Free, CrossingOne };

const char* to_string(ReductionMode m);

/// One side of a 3-vertex-cut split: G - V(G_i) plus d uv-, h vw- and
/// k wu-edges, built by lifting at the contracted even component.
struct ThreeCutSide {
    VertexSet component;
    int a = 0, b = 0, c = 0;
    int d = 0, h = 0, k = 0;
    Multigraph reduced;
    /// g edge -> reduced edge.
    std::vector<std::optional<EdgeId>> edge_map;
    /// Ids of the added edges in `reduced`, with the separator pair each joins
    /// (0 = uv, 1 = vw, 2 = wu).
    std::vector<EdgeId> added;
    std::vector<int> added_type;
};

struct ThreeCutSplitData {
    VertexSet separator;
    VertexSet odd_component;
    std::array<ThreeCutSide, 2> sides;
};

struct CrossingSwapData {
    Vertex x = 0, y = 0, u = 0, v = 0;
    EdgeId e_xy = 0, e_uv = 0;
    /// mu(x,y) * mu(u,v) for the chosen pair, and the same potential of the
    /// swapped graph (0 when it is planar).
    long potential = 0;
    long child_potential = 0;
    /// The swapped graph and its new edges f = xu, f' = yv.
    Multigraph swapped;
    EdgeId f = 0, f_prime = 0;
    /// g edge -> swapped edge (none for e_xy and e_uv).
    std::vector<std::optional<EdgeId>> edge_map;
    /// Matchings of the child cover containing f only / f' only.
    int l = 0;
    int l_prime = 0;
    /// Per conflicting pair: 'u' or 'v', where the chain from x ended.
    std::string chain_ends;
};

struct TraceNode {
    StepKind kind = StepKind::PlanarOracle;
    Multigraph graph;
    PMCover cover;
    std::vector<int> children;
    std::optional<EdgeCut> cut;
    std::optional<ThreeCutSplitData> three_cut;
    std::optional<CrossingSwapData> crossing;
};

struct ReductionTrace {
    ReductionMode mode = ReductionMode::K5Free;
    int t = 0;
    int r = 0;
    std::vector<TraceNode> nodes;
    int root = 0;

    /// Recomputes every combined cover from the leaf covers.
    PMCover replay() const;
    /// Replay agrees with the stored covers, leaves validate, and every
    /// recorded step satisfies its arithmetic.
    bool check(std::string* why = nullptr) const;
    std::string to_dot() const;
};

struct ReductionResult {
    PMCover cover;
    ReductionTrace trace;
};

/// Joins covers of G/X^c (inside: X kept) and G/X (outside) across a
/// non-trivial tight cut, pairing matchings per cut edge in list order.
PMCover combine_across_tight_cut(const Multigraph& g, const EdgeCut& cut, const PMCover& cover_inside,
                                 const PMCover& cover_outside);

/// r-edge-coloring of an r-graph whose underlying simple graph is C4,
/// each color class repeated t times.
PMCover direct_c4_cover(const Multigraph& g, int t, int r);

/// Builds one side of a 3-cut split; InternalDefect if the arithmetic fails.
ThreeCutSide build_three_cut_side(const Multigraph& g, const VertexSet& separator, const VertexSet& component,
                                  int r);

/// Splices the covers of the two reduced sides into a cover of g.
PMCover merge_three_cut(const Multigraph& g, const ThreeCutSplitData& split, const PMCover& cover_side1,
                        const PMCover& cover_side2);

/// Builds the swapped graph for crossing pair (x y, u v).
CrossingSwapData build_crossing_swap(const Multigraph& g, Vertex x, Vertex y, Vertex u, Vertex v);

/// Turns a cover of the swapped graph into one of g by Kempe switching the
/// conflicting pairs. Fills l, l_prime and chain_ends.
PMCover repair_crossing(const Multigraph& g, CrossingSwapData& swap, const PMCover& child_cover);

/// min mu(x,y)*mu(u,v) over one-crossing certificates; 0 when planar.
long crossing_potential(const Multigraph& g);

ReductionResult reduce(const Multigraph& g, int t, int r, ReductionMode mode,
                       const PlanarOracle& oracle = PlanarOracle::exact_search());
ReductionResult reduce_k5_free(const Multigraph& g, int t, int r,
                               const PlanarOracle& oracle = PlanarOracle::exact_search());
ReductionResult reduce_k33_free(const Multigraph& g, int t, int r,
                                const PlanarOracle& oracle = PlanarOracle::exact_search());
ReductionResult reduce_crossing_one(const Multigraph& g, int t, int r,
                                    const PlanarOracle& oracle = PlanarOracle::exact_search());

} // namespace rgraph
