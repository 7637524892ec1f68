#pragma once

#include "rgraph/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgraph {

/// A set of edge ids, kept sorted.
struct Matching {
    std::vector<EdgeId> edge_ids;
    bool perfect = false;

    friend bool operator==(const Matching& a, const Matching& b) { return a.edge_ids == b.edge_ids; }
    friend bool operator<(const Matching& a, const Matching& b) { return a.edge_ids < b.edge_ids; }
};

/// A (t,r)-PM: t*r perfect matchings covering every edge exactly t times.
struct PMCover {
    int t = 0;
    int r = 0;
    std::vector<Matching> matchings;
};

struct EdgeColoring {
    int k = 0;
    /// Color of each edge id, in 0..k-1.
    std::vector<int> colors;
};

/// A component of the symmetric difference of two matchings.
struct KempeChain {
    /// Edge ids in walk order, starting at the smaller endpoint (paths) or at
    /// the smallest vertex (cycles).
    std::vector<EdgeId> edges;
    /// The two ends of a path; empty for a cycle.
    std::vector<Vertex> endpoints;
    bool is_cycle = false;
};

/// Node budget for the exact searches; exceeding it raises BudgetExceeded.
struct SearchBudget {
    std::uint64_t max_nodes = 200'000'000;
};

/// Builds a Matching from ids, or none if two edges share a vertex.
std::optional<Matching> make_matching(const Multigraph& g, std::vector<EdgeId> ids);

/// All perfect matchings in lexicographic order of their sorted id lists.
std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g,
                                                  std::optional<std::size_t> limit = std::nullopt);

/// Exact proper k-edge-coloring search over edges in id order. Colors are
/// normalized (a new color is always the next unused index) and parallel
/// copies take increasing colors.
std::optional<EdgeColoring> edge_color(const Multigraph& g, int k, SearchBudget budget = {});

/// Color classes as matchings.
std::vector<Matching> color_classes(const Multigraph& g, const EdgeColoring& coloring);

/// Each color class of an r-edge-coloring of an r-regular graph, repeated t
/// times.
PMCover cover_from_coloring(const Multigraph& g, const EdgeColoring& coloring, int t, int r);

/// Exact (t,r)-PM search. Solved on the perfect matchings of G_s with demand
/// t*mu(e) per simple edge, then parallel copies are handed out round-robin.
/// Requires g to be an r-graph.
std::optional<PMCover> find_tr_pm(const Multigraph& g, int t, int r, SearchBudget budget = {});

struct CoverCheck {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Independent checker for every (t,r)-PM condition.
CoverCheck validate_tr_pm(const Multigraph& g, const PMCover& cover);

std::vector<KempeChain> kempe_chains(const Multigraph& g, const Matching& m1, const Matching& m2);

/// The chain through v, if v lies on one.
std::optional<KempeChain> kempe_chain_at(const Multigraph& g, const Matching& m1, const Matching& m2, Vertex v);

/// Exchanges the edges of m1 and m2 along `chain`, which must be a component
/// of their symmetric difference (InvalidArgument otherwise).
std::pair<Matching, Matching> kempe_switch(const Multigraph& g, const Matching& m1, const Matching& m2,
                                           const KempeChain& chain);

} // namespace rgraph
