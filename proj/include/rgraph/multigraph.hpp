#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rgraph {

using Vertex = int;
using EdgeId = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free multigraph with identified parallel edges.
///
/// Vertices are 0..n-1. Edge ids are dense 0..m-1 and follow the canonical
/// order of (min endpoint, max endpoint, copy index), so every parallel class
/// occupies a contiguous id range. Instances are immutable values: the
/// transformations in this library return new graphs together with explicit
/// id mappings.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);

    /// Builds a graph from endpoint pairs in any order. When `id_of_input` is
    /// given it receives, for each input pair, the id assigned to it; among
    /// parallel copies the input order is kept.
    static Multigraph from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                                 std::vector<EdgeId>* id_of_input = nullptr);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const EdgeId> incident(Vertex v) const { return incident_.at(static_cast<std::size_t>(v)); }

    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int multiplicity(Vertex u, Vertex v) const;
    int max_multiplicity() const;
    /// Ids of the parallel class between u and v, ascending.
    std::vector<EdgeId> edges_between(Vertex u, Vertex v) const;
    Vertex other_end(EdgeId e, Vertex v) const;

    /// Common degree when the graph is regular (and non-empty).
    std::optional<int> regular_degree() const;
    int max_degree() const;

    /// Distinct neighbours of v, ascending.
    std::vector<Vertex> neighbours(Vertex v) const;

    std::vector<std::pair<Vertex, Vertex>> endpoint_pairs() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// The edge cut of a vertex subset X.
struct EdgeCut {
    VertexSet side;
    std::vector<EdgeId> boundary;
    int side_parity = 0;
    /// Set only when the tightness was evaluated against a known r.
    std::optional<bool> nontrivial_tight;
};

struct VertexCut {
    VertexSet separator;
    int component_count = 0;
    std::vector<int> component_parities;
    /// Components of g - separator, ordered by their smallest vertex.
    std::vector<VertexSet> components;
};

/// Result of G/X.
struct Contraction {
    Multigraph graph;
    /// The contraction vertex w_X, always the highest-numbered vertex.
    Vertex contracted_vertex = 0;
    /// Old vertex -> new vertex (every vertex of X maps to w_X).
    std::vector<Vertex> vertex_map;
    /// Old edge id -> new edge id; edges inside X became loops and are gone.
    std::vector<std::optional<EdgeId>> edge_map;
};

VertexSet normalize(VertexSet x);
VertexSet complement(int n, const VertexSet& x);
bool contains(const VertexSet& x, Vertex v);

/// ∂(X). Tightness is evaluated against r = the common degree when the graph
/// is regular; otherwise it stays unset. Throws InvalidArgument for X = ∅ or
/// X = V.
EdgeCut boundary(const Multigraph& g, const VertexSet& x);
/// Same, evaluated against an explicit r.
EdgeCut boundary(const Multigraph& g, const VertexSet& x, int r);

Contraction contract(const Multigraph& g, const VertexSet& x);

std::vector<VertexSet> components(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// Components of g - removed, ordered by smallest vertex.
std::vector<VertexSet> components_without(const Multigraph& g, const VertexSet& removed);
/// Least k such that removing some k vertices disconnects g; n-1 when the
/// underlying simple graph is complete, 0 when g is already disconnected.
int connectivity(const Multigraph& g);
/// All k-subsets whose removal increases the number of components,
/// lexicographic. Exhaustive; k must be in 0..3.
std::vector<VertexCut> find_vertex_cuts(const Multigraph& g, int k);

Multigraph underlying_simple(const Multigraph& g);

/// Subgraph induced by `keep`; vertex i of the result is keep[i].
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& keep,
                            std::vector<std::optional<EdgeId>>* edge_map = nullptr);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Adds edges (parallel copies allowed); the mapping from old ids is returned
/// through `old_to_new`, the new edges' ids through `added`.
Multigraph with_added_edges(const Multigraph& g, std::span<const std::pair<Vertex, Vertex>> extra,
                            std::vector<EdgeId>* old_to_new = nullptr,
                            std::vector<EdgeId>* added = nullptr);
Multigraph without_edges(const Multigraph& g, std::span<const EdgeId> removed,
                         std::vector<std::optional<EdgeId>>* old_to_new = nullptr);

/// Bitmask helpers for the exhaustive searches (n <= 64).
using VertexMask = std::uint64_t;
VertexMask to_mask(const VertexSet& x);
VertexSet from_mask(VertexMask m);

} // namespace rgraph
