#pragma once

#include "rgraph/multigraph.hpp"

#include <optional>
#include <vector>

namespace rgraph {

enum class VerdictReason {
    Holds,
    NotRegular,   ///< witness: a singleton whose degree differs from r
    OddOrder,     ///< witness: X = V, whose boundary is empty
    SmallOddCut,  ///< witness: odd X with |∂(X)| < r
};

struct RGraphVerdict {
    int r = 0;
    bool is_r_graph = false;
    VerdictReason reason = VerdictReason::Holds;
    std::optional<EdgeCut> witness;
};

/// Exact r-graph test: r-regularity plus |∂(X)| >= r for every odd X.
///
/// Exhaustive over the 2^(n-1) subsets, so it is meant for graphs of at most
/// a few dozen vertices (InvalidArgument beyond 40). When the odd-cut
/// condition fails the witness is the least violating X by size, then
/// lexicographically.
RGraphVerdict verify_r_graph(const Multigraph& g, int r);

/// Least (size, then lexicographic) odd X with |∂(X)| = r and both sides
/// larger than one vertex. Throws PreconditionViolation if g is not an
/// r-graph.
std::optional<EdgeCut> find_nontrivial_tight_cut(const Multigraph& g, int r);

/// All non-trivial tight cuts, one side per cut, in (size, lexicographic)
/// order. Assumes g is an r-graph.
std::vector<EdgeCut> nontrivial_tight_cuts(const Multigraph& g, int r);

enum class CutCase {
    TightCutFound,
    UnderlyingC4,
    UnderlyingK33,
    EvenComponentsOnly,
    NotApplicable,
};

const char* to_string(CutCase c);

/// Outcome of the 2-vertex-cut case analysis. For a separator {u, v},
/// a[i] and b[i] count the edges from component i to u and to v.
struct TwoCutClassification {
    CutCase tag = CutCase::NotApplicable;
    std::optional<EdgeCut> tight_cut;
    VertexCut cut;
    std::vector<int> a, b;
};

struct ThreeCutClassification {
    CutCase tag = CutCase::NotApplicable;
    std::optional<EdgeCut> tight_cut;
    VertexCut cut;
    std::vector<int> a, b, c;
    int odd_component_count = 0;
    /// Facts the argument derives on qualifying inputs.
    bool separator_independent = false;
    bool exactly_three_components = false;
};

/// 2-vertex-cut analysis on a 2-connected r-graph.
///
/// Two or more odd components: both have boundary exactly r, and either one
/// of them has at least two vertices (its boundary is a non-trivial tight cut)
/// or the underlying simple graph is C4. All components even: a[i] = b[i] and
/// ∂(V(G_1) ∪ {u}) is tight (tag EvenComponentsOnly). A separator that does
/// not separate gives NotApplicable.
TwoCutClassification classify_two_cut(const Multigraph& g, int r, const VertexCut& s);

/// 3-vertex-cut analysis on a 3-connected r-graph. Applies when g - S has at
/// least three odd components; then S is independent, there are exactly three
/// components, and either an odd component of order >= 3 yields a tight cut
/// or the underlying simple graph is K3,3.
ThreeCutClassification classify_three_cut(const Multigraph& g, int r, const VertexCut& s);

} // namespace rgraph
