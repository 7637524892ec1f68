#pragma once

#include "rgraph/multigraph.hpp"

#include <vector>

namespace rgraph {

/// Canonical form of a multigraph under vertex relabeling.
///
/// `matrix` is the multiplicity matrix (row-major, n*n) of the graph relabeled
/// by `labeling`, and is the lexicographically least such matrix over all
/// labelings reachable by individualization and refinement. Two graphs are
/// isomorphic iff their forms have equal n and equal matrices.
struct CanonicalForm {
    int n = 0;
    std::vector<int> matrix;
    /// labeling[i] = original vertex placed at canonical position i.
    std::vector<Vertex> labeling;

    bool same_graph_as(const CanonicalForm& other) const
    {
        return n == other.n && matrix == other.matrix;
    }
};

CanonicalForm canonical_form(const Multigraph& g);

/// The graph relabeled into canonical order (edge ids follow from the new
/// labels).
Multigraph canonical_relabel(const Multigraph& g);

/// Multigraph isomorphism, respecting edge multiplicities.
bool is_isomorphic_to(const Multigraph& g, const Multigraph& h);

/// Vertex i of `g` becomes perm[i].
Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& perm);

} // namespace rgraph
