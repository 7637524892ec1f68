#pragma once

#include "rgraph/multigraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgraph {

/// Planarity of the underlying simple graph (Boyer–Myrvold).
bool is_planar(const Multigraph& g);

enum class Forbidden { K5, K33 };

const char* to_string(Forbidden f);

/// Branch sets of a minor model, in vertices of the searched graph. For K5
/// there are five sets; for K3,3 there are six, sets 0..2 forming one side.
struct MinorModel {
    Forbidden target = Forbidden::K5;
    std::vector<VertexSet> branch_sets;
};

/// Exact minor search on the underlying simple graph: degree <= 1 deletion
/// and degree-2 suppression, edge-count pruning, a direct subgraph test, then
/// branching over edge contractions with failures memoized by canonical form.
std::optional<MinorModel> find_minor(const Multigraph& g, Forbidden target);
bool has_k5_minor(const Multigraph& g);
bool has_k33_minor(const Multigraph& g);

/// Checks a model directly: non-empty, disjoint, connected branch sets with
/// an edge between every pair that the target requires.
bool is_minor_model(const Multigraph& g, const MinorModel& model);

enum class CrossingVerdict { Planar, OneCrossing, More };

const char* to_string(CrossingVerdict v);

/// A pair of independent edges of G_s whose crossing explains a drawing with
/// one crossing: replacing them by a new vertex adjacent to x, y, u, v gives a
/// planar graph.
struct CrossingCertificate {
    CrossingVerdict verdict = CrossingVerdict::More;
    /// Edge ids in underlying_simple(g).
    std::optional<std::pair<EdgeId, EdgeId>> crossing_pair;
    /// Endpoints of the two edges: x y and u v.
    Vertex x = -1, y = -1, u = -1, v = -1;
};

/// Planarized graph: both edges removed and a crossing vertex n joined to
/// their four endpoints.
Multigraph planarize_pair(const Multigraph& simple, EdgeId e1, EdgeId e2);

CrossingCertificate crossing_at_most_one(const Multigraph& g);

/// Every valid one-crossing certificate, in canonical pair order. Empty when
/// G_s is planar.
std::vector<CrossingCertificate> crossing_certificates(const Multigraph& g);

/// Independent re-check of a certificate against g.
bool verify_crossing_certificate(const Multigraph& g, const CrossingCertificate& cert);

enum class PieceKind { Planar, WagnerV8, K5, Split };

const char* to_string(PieceKind k);

/// Node of a clique-sum decomposition. Leaves carry a piece of a kind the
/// decomposition theorem allows; split nodes carry the pasting set and two
/// children. Vertex ids are those of the decomposed graph.
struct CliqueSumNode {
    PieceKind kind = PieceKind::Planar;
    /// The simple graph of this node, on local vertices 0..k-1.
    Multigraph piece;
    /// Local vertex -> vertex of the decomposed graph.
    std::vector<Vertex> to_root;
    /// Split nodes only: the pasting set, its clique edges that this node's
    /// graph lacks, and the two children.
    VertexSet separator;
    std::vector<std::pair<Vertex, Vertex>> virtual_edges;
    std::vector<int> children;
};

struct CliqueSumTree {
    Forbidden mode = Forbidden::K5;
    int vertex_count = 0;
    std::vector<CliqueSumNode> nodes;
    int root = 0;

    std::vector<int> leaves() const;
};

/// Decomposes G_s along separators of size <= 3 (K5 mode) or <= 2 (K3,3
/// mode), smallest size first, then lexicographically, each piece receiving a
/// clique on the separator. A split is taken only if both pieces stay free of
/// the forbidden minor. Leaves are verified planar, V8 or K5. Throws
/// PreconditionViolation when G_s has the forbidden minor.
CliqueSumTree wagner_decompose(const Multigraph& g, Forbidden mode);

/// Pastes the leaves back together and removes the virtual clique edges.
Multigraph recompose(const CliqueSumTree& tree);

/// Checks recomposition, leaf tags and separator sizes.
bool verify_clique_sum_tree(const Multigraph& g, const CliqueSumTree& tree, std::string* why = nullptr);

struct SplittableThreeCut {
    VertexCut cut;
    /// G_s with the separator completed to a triangle.
    Multigraph augmented;
};

/// First 3-vertex-cut S (lexicographic) with omega(G - S) >= 3 whose
/// triangle augmentation of G_s is K5-minor-free. Requires G_s 3-connected,
/// non-planar, K5-minor-free and not V8.
std::optional<SplittableThreeCut> find_splittable_three_cut(const Multigraph& g);

} // namespace rgraph
