#include "rgraph/multigraph.hpp"

#include "rgraph/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace rgraph {

namespace {

bool edge_less(const Edge& a, const Edge& b)
{
    return a.u != b.u ? a.u < b.u : a.v < b.v;
}

void check_subset(int n, const VertexSet& x)
{
    if (x.empty() || static_cast<int>(x.size()) >= n)
        throw InvalidArgument("vertex subset must be non-empty and proper");
    for (Vertex v : x)
        if (v < 0 || v >= n)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

// Lexicographic k-subsets of 0..n-1; `visit` returns false to stop.
template <typename F>
bool for_each_subset(int n, int k, F&& visit)
{
    if (k > n)
        return true;
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (!visit(pick))
            return false;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

Multigraph::Multigraph(int n) : n_(n), incident_(static_cast<std::size_t>(n))
{
    if (n < 0)
        throw InvalidArgument("negative vertex count");
}

Multigraph Multigraph::from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                                  std::vector<EdgeId>* id_of_input)
{
    Multigraph g(n);
    std::vector<Edge> raw;
    raw.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InvalidArgument("edge endpoint out of range");
        if (a == b)
            throw InvalidArgument("loops are not allowed");
        raw.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return edge_less(raw[static_cast<std::size_t>(i)], raw[static_cast<std::size_t>(j)]);
    });
    g.edges_.reserve(raw.size());
    if (id_of_input)
        id_of_input->assign(raw.size(), -1);
    for (std::size_t id = 0; id < order.size(); ++id) {
        g.edges_.push_back(raw[static_cast<std::size_t>(order[id])]);
        if (id_of_input)
            (*id_of_input)[static_cast<std::size_t>(order[id])] = static_cast<EdgeId>(id);
    }
    for (std::size_t id = 0; id < g.edges_.size(); ++id) {
        g.incident_[static_cast<std::size_t>(g.edges_[id].u)].push_back(static_cast<EdgeId>(id));
        g.incident_[static_cast<std::size_t>(g.edges_[id].v)].push_back(static_cast<EdgeId>(id));
    }
    return g;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const
{
    if (u == v)
        return 0;
    Edge key{std::min(u, v), std::max(u, v)};
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key, edge_less);
    return static_cast<int>(hi - lo);
}

int Multigraph::max_multiplicity() const
{
    int best = 0;
    for (std::size_t i = 0; i < edges_.size();) {
        std::size_t j = i;
        while (j < edges_.size() && edges_[j] == edges_[i])
            ++j;
        best = std::max(best, static_cast<int>(j - i));
        i = j;
    }
    return best;
}

std::vector<EdgeId> Multigraph::edges_between(Vertex u, Vertex v) const
{
    std::vector<EdgeId> out;
    if (u == v)
        return out;
    Edge key{std::min(u, v), std::max(u, v)};
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key, edge_less);
    for (auto it = lo; it != hi; ++it)
        out.push_back(static_cast<EdgeId>(it - edges_.begin()));
    return out;
}

Vertex Multigraph::other_end(EdgeId e, Vertex v) const
{
    const Edge& ed = edge(e);
    if (ed.u == v)
        return ed.v;
    if (ed.v == v)
        return ed.u;
    throw InvalidArgument("vertex is not an endpoint of the edge");
}

std::optional<int> Multigraph::regular_degree() const
{
    if (n_ == 0)
        return std::nullopt;
    int d = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != d)
            return std::nullopt;
    return d;
}

int Multigraph::max_degree() const
{
    int d = 0;
    for (Vertex v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<Vertex> Multigraph::neighbours(Vertex v) const
{
    std::vector<Vertex> out;
    for (EdgeId e : incident(v))
        out.push_back(other_end(e, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Multigraph::endpoint_pairs() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_)
        out.emplace_back(e.u, e.v);
    return out;
}

VertexSet normalize(VertexSet x)
{
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
}

VertexSet complement(int n, const VertexSet& x)
{
    VertexSet out;
    std::size_t j = 0;
    for (Vertex v = 0; v < n; ++v) {
        while (j < x.size() && x[j] < v)
            ++j;
        if (j < x.size() && x[j] == v)
            continue;
        out.push_back(v);
    }
    return out;
}

bool contains(const VertexSet& x, Vertex v)
{
    return std::binary_search(x.begin(), x.end(), v);
}

EdgeCut boundary(const Multigraph& g, const VertexSet& x_in, int r)
{
    VertexSet x = normalize(x_in);
    check_subset(g.vertex_count(), x);
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : x)
        in[static_cast<std::size_t>(v)] = 1;
    EdgeCut cut;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in[static_cast<std::size_t>(ed.u)] != in[static_cast<std::size_t>(ed.v)])
            cut.boundary.push_back(e);
    }
    int size = static_cast<int>(x.size());
    cut.side_parity = size % 2;
    if (r > 0) {
        cut.nontrivial_tight = size % 2 == 1 && static_cast<int>(cut.boundary.size()) == r &&
                               size > 1 && g.vertex_count() - size > 1;
    }
    cut.side = std::move(x);
    return cut;
}

EdgeCut boundary(const Multigraph& g, const VertexSet& x)
{
    return boundary(g, x, g.regular_degree().value_or(0));
}

Contraction contract(const Multigraph& g, const VertexSet& x_in)
{
    VertexSet x = normalize(x_in);
    check_subset(g.vertex_count(), x);
    int n = g.vertex_count();
    int new_n = n - static_cast<int>(x.size()) + 1;
    Contraction c;
    c.contracted_vertex = new_n - 1;
    c.vertex_map.assign(static_cast<std::size_t>(n), -1);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v)
        c.vertex_map[static_cast<std::size_t>(v)] = contains(x, v) ? c.contracted_vertex : next++;

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<EdgeId> source;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Vertex a = c.vertex_map[static_cast<std::size_t>(g.edge(e).u)];
        Vertex b = c.vertex_map[static_cast<std::size_t>(g.edge(e).v)];
        if (a == b)
            continue;
        pairs.emplace_back(a, b);
        source.push_back(e);
    }
    std::vector<EdgeId> ids;
    c.graph = Multigraph::from_pairs(new_n, pairs, &ids);
    c.edge_map.assign(static_cast<std::size_t>(g.edge_count()), std::nullopt);
    for (std::size_t i = 0; i < source.size(); ++i)
        c.edge_map[static_cast<std::size_t>(source[i])] = ids[i];
    return c;
}

std::vector<VertexSet> components_without(const Multigraph& g, const VertexSet& removed)
{
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (Vertex v : removed)
        comp[static_cast<std::size_t>(v)] = -2;
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            out.back().push_back(v);
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.other_end(e, v);
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<VertexSet> components(const Multigraph& g)
{
    return components_without(g, {});
}

bool is_connected(const Multigraph& g)
{
    return components(g).size() <= 1;
}

int connectivity(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n <= 1)
        return 0;
    if (!is_connected(g))
        return 0;
    for (int k = 1; k <= n - 2; ++k) {
        bool found = !for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
            return components_without(g, s).size() <= 1;
        });
        if (found)
            return k;
    }
    return n - 1;
}

std::vector<VertexCut> find_vertex_cuts(const Multigraph& g, int k)
{
    if (k < 0 || k > 3)
        throw InvalidArgument("find_vertex_cuts supports k <= 3");
    std::vector<VertexCut> out;
    std::size_t base = components(g).size();
    for_each_subset(g.vertex_count(), k, [&](const std::vector<Vertex>& s) {
        auto comps = components_without(g, s);
        if (comps.size() > base) {
            VertexCut cut;
            cut.separator = s;
            cut.component_count = static_cast<int>(comps.size());
            for (const auto& c : comps)
                cut.component_parities.push_back(static_cast<int>(c.size() % 2));
            cut.components = std::move(comps);
            out.push_back(std::move(cut));
        }
        return true;
    });
    return out;
}

Multigraph underlying_simple(const Multigraph& g)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g.edges())
        if (pairs.empty() || pairs.back() != std::pair{e.u, e.v})
            pairs.emplace_back(e.u, e.v);
    return Multigraph::from_pairs(g.vertex_count(), pairs);
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& keep_in,
                            std::vector<std::optional<EdgeId>>* edge_map)
{
    VertexSet keep = normalize(keep_in);
    std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<EdgeId> source;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Vertex a = index[static_cast<std::size_t>(g.edge(e).u)];
        Vertex b = index[static_cast<std::size_t>(g.edge(e).v)];
        if (a < 0 || b < 0)
            continue;
        pairs.emplace_back(a, b);
        source.push_back(e);
    }
    std::vector<EdgeId> ids;
    Multigraph h = Multigraph::from_pairs(static_cast<int>(keep.size()), pairs, &ids);
    if (edge_map) {
        edge_map->assign(static_cast<std::size_t>(g.edge_count()), std::nullopt);
        for (std::size_t i = 0; i < source.size(); ++i)
            (*edge_map)[static_cast<std::size_t>(source[i])] = ids[i];
    }
    return h;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b)
{
    auto pairs = a.endpoint_pairs();
    for (auto [u, v] : b.endpoint_pairs())
        pairs.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Multigraph::from_pairs(a.vertex_count() + b.vertex_count(), pairs);
}

Multigraph with_added_edges(const Multigraph& g, std::span<const std::pair<Vertex, Vertex>> extra,
                            std::vector<EdgeId>* old_to_new, std::vector<EdgeId>* added)
{
    auto pairs = g.endpoint_pairs();
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    std::vector<EdgeId> ids;
    Multigraph h = Multigraph::from_pairs(g.vertex_count(), pairs, &ids);
    auto m = static_cast<std::ptrdiff_t>(g.edge_count());
    if (old_to_new)
        old_to_new->assign(ids.begin(), ids.begin() + m);
    if (added)
        added->assign(ids.begin() + m, ids.end());
    return h;
}

Multigraph without_edges(const Multigraph& g, std::span<const EdgeId> removed,
                         std::vector<std::optional<EdgeId>>* old_to_new)
{
    std::vector<char> drop(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : removed) {
        if (e < 0 || e >= g.edge_count())
            throw InvalidArgument("edge id out of range");
        drop[static_cast<std::size_t>(e)] = 1;
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<EdgeId> source;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (drop[static_cast<std::size_t>(e)])
            continue;
        pairs.emplace_back(g.edge(e).u, g.edge(e).v);
        source.push_back(e);
    }
    std::vector<EdgeId> ids;
    Multigraph h = Multigraph::from_pairs(g.vertex_count(), pairs, &ids);
    if (old_to_new) {
        old_to_new->assign(static_cast<std::size_t>(g.edge_count()), std::nullopt);
        for (std::size_t i = 0; i < source.size(); ++i)
            (*old_to_new)[static_cast<std::size_t>(source[i])] = ids[i];
    }
    return h;
}

VertexMask to_mask(const VertexSet& x)
{
    VertexMask m = 0;
    for (Vertex v : x) {
        if (v < 0 || v >= 64)
            throw InvalidArgument("vertex mask supports at most 64 vertices");
        m |= VertexMask{1} << v;
    }
    return m;
}

VertexSet from_mask(VertexMask m)
{
    VertexSet out;
    for (Vertex v = 0; m; ++v, m >>= 1)
        if (m & 1)
            out.push_back(v);
    return out;
}

} // namespace rgraph
