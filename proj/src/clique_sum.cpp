#include "rgraph/minor_topology.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rgraph {

namespace {

constexpr int max_grouped_components = 10;

bool free_of(const Multigraph& h, Forbidden mode)
{
    if (is_planar(h))
        return true;
    return !find_minor(h, mode).has_value();
}

Multigraph with_clique(const Multigraph& h, const VertexSet& s, std::vector<std::pair<Vertex, Vertex>>* missing)
{
    std::vector<std::pair<Vertex, Vertex>> extra;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (h.multiplicity(s[i], s[j]) == 0)
                extra.emplace_back(s[i], s[j]);
    if (missing)
        *missing = extra;
    return with_added_edges(h, extra);
}

bool all_components_full(const Multigraph& h, const VertexSet& s, const std::vector<VertexSet>& comps)
{
    for (const VertexSet& c : comps)
        for (Vertex v : s) {
            bool touches = false;
            for (Vertex w : c)
                if (h.multiplicity(v, w) > 0) {
                    touches = true;
                    break;
                }
            if (!touches)
                return false;
        }
    return true;
}

template <typename F>
void for_each_k_subset(int n, int k, F&& visit)
{
    if (k > n)
        return;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(VertexSet(pick.begin(), pick.end())))
            return;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void check_component_monotonicity(const Multigraph& whole, const Multigraph& piece, const VertexSet& piece_vertices)
{
    int p = piece.vertex_count();
    for (int k = 1; k <= 2 && k < p; ++k) {
        for_each_k_subset(p, k, [&](const VertexSet& t) {
            VertexSet in_whole;
            for (Vertex v : t)
                in_whole.push_back(piece_vertices[static_cast<std::size_t>(v)]);
            if (components_without(piece, t).size() > components_without(whole, in_whole).size())
                throw InternalDefect("clique-sum piece has more components than the whole after a deletion");
            return true;
        });
    }
}

class Decomposer {
public:
    explicit Decomposer(Forbidden mode) : mode_(mode) {}

    CliqueSumTree run(const Multigraph& s)
    {
        tree_.mode = mode_;
        tree_.vertex_count = s.vertex_count();
        std::vector<Vertex> identity(static_cast<std::size_t>(s.vertex_count()));
        for (Vertex v = 0; v < s.vertex_count(); ++v)
            identity[static_cast<std::size_t>(v)] = v;
        tree_.root = build(s, identity);
        return std::move(tree_);
    }

private:
    int add_leaf(const Multigraph& h, const std::vector<Vertex>& to_root, PieceKind kind)
    {
        CliqueSumNode node;
        node.kind = kind;
        node.piece = h;
        node.to_root = to_root;
        tree_.nodes.push_back(std::move(node));
        return static_cast<int>(tree_.nodes.size()) - 1;
    }

    int build(const Multigraph& h, const std::vector<Vertex>& to_root)
    {
        if (mode_ == Forbidden::K5 && is_isomorphic_to(h, fixtures::wagner_v8()))
            return add_leaf(h, to_root, PieceKind::WagnerV8);
        if (mode_ == Forbidden::K33 && is_isomorphic_to(h, fixtures::complete(5)))
            return add_leaf(h, to_root, PieceKind::K5);
        if (auto split = try_split(h, to_root))
            return *split;
        if (is_planar(h))
            return add_leaf(h, to_root, PieceKind::Planar);
        throw InternalDefect("piece admits no clique-sum split and is not a permitted leaf");
    }

    std::optional<int> try_split(const Multigraph& h, const std::vector<Vertex>& to_root)
    {
        int max_k = mode_ == Forbidden::K5 ? 3 : 2;
        int n = h.vertex_count();
        bool connected = is_connected(h);
        std::optional<int> made;
        for (int k = 0; k <= max_k && k < n && !made; ++k) {
            for_each_k_subset(n, k, [&](const VertexSet& s) {
                auto comps = components_without(h, s);
                if (comps.size() < 2)
                    return true;
                if (k > 0 && !all_components_full(h, s, comps))
                    return true;
                made = split_on(h, to_root, s, comps, connected);
                return !made;
            });
        }
        return made;
    }

    std::optional<int> split_on(const Multigraph& h, const std::vector<Vertex>& to_root, const VertexSet& s,
                                const std::vector<VertexSet>& comps, bool connected)
    {
        int c = static_cast<int>(comps.size());
        std::vector<unsigned> groupings;
        if (c <= max_grouped_components) {
            for (unsigned mask = 1; mask + 1 < (1u << c); mask += 2)
                groupings.push_back(mask);
        } else {
            for (int i = 0; i < c; ++i)
                groupings.push_back(1u << i);
        }
        for (unsigned mask : groupings) {
            VertexSet side_a = s, side_b = s;
            for (int i = 0; i < c; ++i) {
                auto& dst = (mask >> i & 1) ? side_a : side_b;
                dst.insert(dst.end(), comps[static_cast<std::size_t>(i)].begin(),
                           comps[static_cast<std::size_t>(i)].end());
            }
            side_a = normalize(side_a);
            side_b = normalize(side_b);
            auto piece_of = [&](const VertexSet& side) {
                Multigraph sub = induced_subgraph(h, side);
                VertexSet local_s;
                for (Vertex v : s)
                    local_s.push_back(static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), v) - side.begin()));
                return with_clique(sub, local_s, nullptr);
            };
            Multigraph pa = piece_of(side_a);
            Multigraph pb = piece_of(side_b);
            if (!free_of(pa, mode_) || !free_of(pb, mode_))
                continue;
            if (connected) {
                check_component_monotonicity(h, pa, side_a);
                check_component_monotonicity(h, pb, side_b);
            }

            CliqueSumNode node;
            node.kind = PieceKind::Split;
            node.piece = h;
            node.to_root = to_root;
            std::vector<std::pair<Vertex, Vertex>> missing;
            with_clique(h, s, &missing);
            for (Vertex v : s)
                node.separator.push_back(to_root[static_cast<std::size_t>(v)]);
            node.separator = normalize(node.separator);
            for (auto [a, b] : missing) {
                Vertex ra = to_root[static_cast<std::size_t>(a)], rb = to_root[static_cast<std::size_t>(b)];
                node.virtual_edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
            }
            tree_.nodes.push_back(std::move(node));
            int id = static_cast<int>(tree_.nodes.size()) - 1;
            for (const VertexSet* side : {&side_a, &side_b}) {
                std::vector<Vertex> child_map;
                for (Vertex v : *side)
                    child_map.push_back(to_root[static_cast<std::size_t>(v)]);
                int child = build(side == &side_a ? pa : pb, child_map);
                tree_.nodes[static_cast<std::size_t>(id)].children.push_back(child);
            }
            return id;
        }
        return std::nullopt;
    }

    Forbidden mode_;
    CliqueSumTree tree_;
};

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

EdgeSet recompose_node(const CliqueSumTree& tree, int id)
{
    const CliqueSumNode& node = tree.nodes.at(static_cast<std::size_t>(id));
    EdgeSet out;
    if (node.kind != PieceKind::Split) {
        for (const Edge& e : node.piece.edges()) {
            Vertex a = node.to_root.at(static_cast<std::size_t>(e.u));
            Vertex b = node.to_root.at(static_cast<std::size_t>(e.v));
            out.emplace(std::min(a, b), std::max(a, b));
        }
        return out;
    }
    for (int child : node.children) {
        EdgeSet part = recompose_node(tree, child);
        out.insert(part.begin(), part.end());
    }
    for (const auto& e : node.virtual_edges)
        out.erase(e);
    return out;
}

} // namespace

std::vector<int> CliqueSumTree::leaves() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].kind != PieceKind::Split)
            out.push_back(static_cast<int>(i));
    return out;
}

CliqueSumTree wagner_decompose(const Multigraph& g, Forbidden mode)
{
    Multigraph s = underlying_simple(g);
    if (auto model = find_minor(s, mode))
        throw PreconditionViolation(std::string("graph has a ") + to_string(mode) + " minor");
    return Decomposer(mode).run(s);
}

Multigraph recompose(const CliqueSumTree& tree)
{
    EdgeSet edges = recompose_node(tree, tree.root);
    std::vector<std::pair<Vertex, Vertex>> pairs(edges.begin(), edges.end());
    return Multigraph::from_pairs(tree.vertex_count, pairs);
}

bool verify_clique_sum_tree(const Multigraph& g, const CliqueSumTree& tree, std::string* why)
{
    auto fail = [&](const std::string& reason) {
        if (why)
            *why = reason;
        return false;
    };
    if (tree.nodes.empty() || tree.root < 0 || tree.root >= static_cast<int>(tree.nodes.size()))
        return fail("tree has no root");
    std::size_t max_sep = tree.mode == Forbidden::K5 ? 3 : 2;
    for (const CliqueSumNode& node : tree.nodes) {
        if (node.to_root.size() != static_cast<std::size_t>(node.piece.vertex_count()))
            return fail("vertex map size differs from piece size");
        switch (node.kind) {
        case PieceKind::Split:
            if (node.separator.size() > max_sep)
                return fail("pasting set too large");
            if (node.children.size() != 2)
                return fail("split node needs two children");
            break;
        case PieceKind::Planar:
            if (!is_planar(node.piece))
                return fail("leaf tagged planar is not planar");
            break;
        case PieceKind::WagnerV8:
            if (tree.mode != Forbidden::K5 || !is_isomorphic_to(node.piece, fixtures::wagner_v8()))
                return fail("leaf tagged V8 is not the Wagner graph");
            break;
        case PieceKind::K5:
            if (tree.mode != Forbidden::K33 || !is_isomorphic_to(node.piece, fixtures::complete(5)))
                return fail("leaf tagged K5 is not K5");
            break;
        }
    }
    if (!(recompose(tree) == underlying_simple(g)))
        return fail("recomposition differs from the input");
    return true;
}

std::optional<SplittableThreeCut> find_splittable_three_cut(const Multigraph& g)
{
    Multigraph s = underlying_simple(g);
    if (connectivity(s) < 3)
        throw PreconditionViolation("find_splittable_three_cut needs a 3-connected graph");
    if (is_planar(s))
        throw PreconditionViolation("find_splittable_three_cut needs a non-planar graph");
    if (is_isomorphic_to(s, fixtures::wagner_v8()))
        throw PreconditionViolation("find_splittable_three_cut excludes the Wagner graph");
    if (has_k5_minor(s))
        throw PreconditionViolation("find_splittable_three_cut needs a K5-minor-free graph");
    for (VertexCut& cut : find_vertex_cuts(s, 3)) {
        if (cut.component_count < 3)
            continue;
        Multigraph augmented = with_clique(s, cut.separator, nullptr);
        if (has_k5_minor(augmented))
            continue;
        if (static_cast<int>(components_without(g, cut.separator).size()) != cut.component_count)
            throw InternalDefect("separator splits g and g_s differently");
        return SplittableThreeCut{std::move(cut), std::move(augmented)};
    }
    return std::nullopt;
}

} // namespace rgraph
