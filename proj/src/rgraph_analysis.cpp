#include "rgraph/rgraph_analysis.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rgraph {

namespace {

constexpr int max_exhaustive_vertices = 40;

struct WeightedAdjacency {
    std::vector<std::vector<std::pair<Vertex, int>>> rows;
    std::vector<int> degree;

    explicit WeightedAdjacency(const Multigraph& g)
        : rows(static_cast<std::size_t>(g.vertex_count())), degree(static_cast<std::size_t>(g.vertex_count()))
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            degree[static_cast<std::size_t>(v)] = g.degree(v);
            for (Vertex u : g.neighbours(v))
                rows[static_cast<std::size_t>(v)].emplace_back(u, g.multiplicity(u, v));
        }
    }

    int weight_into(Vertex v, VertexMask x) const
    {
        int w = 0;
        for (auto [u, m] : rows[static_cast<std::size_t>(v)])
            if (x >> u & 1)
                w += m;
        return w;
    }

    int cut_size(VertexMask x) const
    {
        int c = 0;
        for (VertexMask rest = x; rest; rest &= rest - 1) {
            Vertex v = std::countr_zero(rest);
            c += degree[static_cast<std::size_t>(v)] - weight_into(v, x);
        }
        return c;
    }
};

// Visits k-subsets of 0..n-1 as masks in lexicographic order of their sorted
// vertex lists; stops when `visit` returns false.
template <typename F>
bool for_each_mask(int n, int k, F&& visit)
{
    if (k > n || k < 0)
        return true;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        VertexMask m = 0;
        for (int v : pick)
            m |= VertexMask{1} << v;
        if (!visit(m))
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

void check_size(const Multigraph& g)
{
    if (g.vertex_count() > max_exhaustive_vertices)
        throw InvalidArgument("exhaustive odd-cut search is limited to 40 vertices");
}

void require_r_graph(const Multigraph& g, int r, const char* what)
{
    if (!verify_r_graph(g, r).is_r_graph)
        throw PreconditionViolation(std::string(what) + ": input is not an r-graph for r = " + std::to_string(r));
}

EdgeCut verified_tight(const Multigraph& g, const VertexSet& x, int r)
{
    EdgeCut cut = boundary(g, x, r);
    if (!cut.nontrivial_tight.value_or(false))
        throw InternalDefect("derived cut is not a non-trivial tight cut");
    return cut;
}

int edges_to(const Multigraph& g, const VertexSet& comp, Vertex s)
{
    int count = 0;
    for (Vertex v : comp)
        count += g.multiplicity(v, s);
    return count;
}

} // namespace

const char* to_string(CutCase c)
{
    switch (c) {
    case CutCase::TightCutFound:
        return "tight-cut-found";
    case CutCase::UnderlyingC4:
        return "underlying-C4";
    case CutCase::UnderlyingK33:
        return "underlying-K33";
    case CutCase::EvenComponentsOnly:
        return "even-components-only";
    case CutCase::NotApplicable:
        return "not-applicable";
    }
    return "?";
}

RGraphVerdict verify_r_graph(const Multigraph& g, int r)
{
    if (r < 1)
        throw InvalidArgument("r must be at least 1");
    RGraphVerdict verdict;
    verdict.r = r;
    int n = g.vertex_count();
    if (n == 0) {
        verdict.reason = VerdictReason::NotRegular;
        return verdict;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != r) {
            verdict.reason = VerdictReason::NotRegular;
            verdict.witness = boundary(g, VertexSet{v}, r);
            return verdict;
        }
    }
    if (n % 2 == 1) {
        verdict.reason = VerdictReason::OddOrder;
        EdgeCut all;
        all.side.resize(static_cast<std::size_t>(n));
        std::iota(all.side.begin(), all.side.end(), 0);
        all.side_parity = 1;
        all.nontrivial_tight = false;
        verdict.witness = std::move(all);
        return verdict;
    }
    check_size(g);
    WeightedAdjacency adj(g);

    // Gray-code walk over subsets of {0..n-2}; complements cover the rest.
    bool violated = false;
    VertexMask x = 0;
    int cut = 0;
    int size = 0;
    std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < limit && !violated; ++i) {
        Vertex v = std::countr_zero(i);
        VertexMask bit = VertexMask{1} << v;
        int deg = adj.degree[static_cast<std::size_t>(v)];
        if (x & bit) {
            x &= ~bit;
            cut -= deg - 2 * adj.weight_into(v, x);
            --size;
        } else {
            cut += deg - 2 * adj.weight_into(v, x);
            x |= bit;
            ++size;
        }
        if (size % 2 == 1 && cut < r)
            violated = true;
    }
    if (!violated) {
        verdict.is_r_graph = true;
        return verdict;
    }
    verdict.reason = VerdictReason::SmallOddCut;
    for (int k = 1; k < n && !verdict.witness; k += 2) {
        for_each_mask(n, k, [&](VertexMask m) {
            if (adj.cut_size(m) < r) {
                verdict.witness = boundary(g, from_mask(m), r);
                return false;
            }
            return true;
        });
    }
    return verdict;
}

std::vector<EdgeCut> nontrivial_tight_cuts(const Multigraph& g, int r)
{
    check_size(g);
    std::vector<EdgeCut> out;
    int n = g.vertex_count();
    WeightedAdjacency adj(g);
    for (int k = 3; 2 * k <= n; k += 2) {
        for_each_mask(n, k, [&](VertexMask m) {
            if (2 * k == n && !(m & 1))
                return true;
            if (adj.cut_size(m) == r)
                out.push_back(boundary(g, from_mask(m), r));
            return true;
        });
    }
    return out;
}

std::optional<EdgeCut> find_nontrivial_tight_cut(const Multigraph& g, int r)
{
    require_r_graph(g, r, "find_nontrivial_tight_cut");
    int n = g.vertex_count();
    WeightedAdjacency adj(g);
    std::optional<EdgeCut> found;
    for (int k = 3; 2 * k <= n && !found; k += 2) {
        for_each_mask(n, k, [&](VertexMask m) {
            if (adj.cut_size(m) == r) {
                found = boundary(g, from_mask(m), r);
                return false;
            }
            return true;
        });
    }
    return found;
}

TwoCutClassification classify_two_cut(const Multigraph& g, int r, const VertexCut& s)
{
    VertexSet sep = normalize(s.separator);
    if (sep.size() != 2)
        throw PreconditionViolation("classify_two_cut needs a 2-vertex separator");
    require_r_graph(g, r, "classify_two_cut");
    if (connectivity(g) < 2)
        throw PreconditionViolation("classify_two_cut needs a 2-connected graph");

    TwoCutClassification out;
    auto comps = components_without(g, sep);
    out.cut.separator = sep;
    out.cut.component_count = static_cast<int>(comps.size());
    for (const auto& c : comps)
        out.cut.component_parities.push_back(static_cast<int>(c.size() % 2));
    out.cut.components = comps;
    if (comps.size() <= components(g).size())
        return out;

    Vertex u = sep[0], v = sep[1];
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        out.a.push_back(edges_to(g, comps[i], u));
        out.b.push_back(edges_to(g, comps[i], v));
        if (comps[i].size() % 2 == 1)
            odd.push_back(i);
    }

    if (odd.size() >= 2) {
        std::size_t i1 = odd[0], i2 = odd[1];
        if (out.a[i1] + out.b[i1] != r || out.a[i2] + out.b[i2] != r || out.a[i1] != out.b[i2] ||
            comps.size() != 2 || g.multiplicity(u, v) != 0)
            throw InternalDefect("2-cut with two odd components violates the forced counts");
        for (std::size_t i : {i1, i2}) {
            if (comps[i].size() >= 2) {
                out.tag = CutCase::TightCutFound;
                out.tight_cut = verified_tight(g, comps[i], r);
                return out;
            }
        }
        if (!is_isomorphic_to(underlying_simple(g), fixtures::cycle(4)))
            throw InternalDefect("2-cut with two singleton components but underlying graph is not C4");
        out.tag = CutCase::UnderlyingC4;
        return out;
    }

    // All components even: a_i = b_i, and V(G_1) + u is a tight side.
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (out.a[i] != out.b[i])
            throw InternalDefect("even component with a_i != b_i");
    VertexSet side = comps[0];
    side.push_back(u);
    out.tag = CutCase::EvenComponentsOnly;
    out.tight_cut = verified_tight(g, normalize(side), r);
    return out;
}

ThreeCutClassification classify_three_cut(const Multigraph& g, int r, const VertexCut& s)
{
    VertexSet sep = normalize(s.separator);
    if (sep.size() != 3)
        throw PreconditionViolation("classify_three_cut needs a 3-vertex separator");
    require_r_graph(g, r, "classify_three_cut");
    if (connectivity(g) < 3)
        throw PreconditionViolation("classify_three_cut needs a 3-connected graph");

    ThreeCutClassification out;
    auto comps = components_without(g, sep);
    out.cut.separator = sep;
    out.cut.component_count = static_cast<int>(comps.size());
    for (const auto& c : comps)
        out.cut.component_parities.push_back(static_cast<int>(c.size() % 2));
    out.cut.components = comps;

    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        out.a.push_back(edges_to(g, comps[i], sep[0]));
        out.b.push_back(edges_to(g, comps[i], sep[1]));
        out.c.push_back(edges_to(g, comps[i], sep[2]));
        if (comps[i].size() % 2 == 1)
            odd.push_back(i);
    }
    out.odd_component_count = static_cast<int>(odd.size());
    if (comps.size() < 3 || odd.size() < 3)
        return out;

    out.separator_independent = g.multiplicity(sep[0], sep[1]) == 0 && g.multiplicity(sep[1], sep[2]) == 0 &&
                                g.multiplicity(sep[0], sep[2]) == 0;
    out.exactly_three_components = comps.size() == 3;
    if (!out.separator_independent || !out.exactly_three_components)
        throw InternalDefect("3-cut with three odd components must be independent with exactly three components");
    for (std::size_t i : odd)
        if (out.a[i] + out.b[i] + out.c[i] != r)
            throw InternalDefect("odd component boundary of a 3-cut is not tight");

    for (std::size_t i : odd) {
        if (comps[i].size() >= 3) {
            out.tag = CutCase::TightCutFound;
            out.tight_cut = verified_tight(g, comps[i], r);
            return out;
        }
    }
    if (!is_isomorphic_to(underlying_simple(g), fixtures::complete_bipartite(3, 3)))
        throw InternalDefect("3-cut with singleton components but underlying graph is not K3,3");
    out.tag = CutCase::UnderlyingK33;
    return out;
}

} // namespace rgraph
