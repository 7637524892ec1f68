#pragma once

#include "rgraph/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace rgraph {

/// One lifting at w: delete the edges e1 = w y and e2 = w z, add y z.
struct LiftStep {
    Vertex y = 0;
    Vertex z = 0;
    EdgeId e1 = 0;
    EdgeId e2 = 0;
};

/// Liftings to perform on G/X at its contraction vertex.
///
/// Edge ids refer to the contracted graph G/X as returned by contract(); they
/// stay valid for the whole plan because a lifting only removes edges at w and
/// only adds edges away from it.
struct LiftingPlan {
    VertexSet x;
    int r = 0;
    Vertex at = 0;
    std::vector<LiftStep> steps;
    bool delete_vertex_after = false;
};

struct LiftResult {
    Multigraph graph;
    /// Edge of the input g -> edge of the result (none for edges inside X and
    /// for the lifted boundary edges).
    std::vector<std::optional<EdgeId>> edge_map;
    /// Ids in the result of the edges created by the steps, in step order.
    std::vector<EdgeId> added;
    /// Vertex of g -> vertex of the result; vertices of X map to w, or to -1
    /// when w was deleted.
    std::vector<Vertex> vertex_map;
};

/// Number of liftings prescribed for X.
int lifting_step_count(const Multigraph& g, const VertexSet& x, int r);

/// Searches for liftings that turn G/X into a connected r-graph.
///
/// Backtracks over multisets of neighbour pairs of w, visited in a seeded
/// shuffle of the canonical pair order; each complete candidate is checked
/// with verify_r_graph and a connectivity test. Parallel edges are
/// interchangeable, so each step uses the lowest unused edge id of its class.
/// Requires g to be a connected r-graph with r >= 2. Failure to find a plan
/// is a defect and raises InternalDefect.
LiftingPlan plan_lifting(const Multigraph& g, const VertexSet& x, int r, std::uint64_t seed);

/// Plan with `count` liftings for each (y, z) entry of `pairs`, using the
/// lowest free edge ids. Nothing is verified beyond edge availability.
LiftingPlan lifting_plan_from_pairs(const Multigraph& g, const VertexSet& x, int r,
                                    const std::vector<std::tuple<Vertex, Vertex, int>>& pairs,
                                    bool delete_vertex_after);

/// Executes a plan. Stale or inconsistent ids raise InvalidPlan.
LiftResult apply_lifting(const Multigraph& g, const LiftingPlan& plan);

} // namespace rgraph
