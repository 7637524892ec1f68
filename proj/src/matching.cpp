#include "rgraph/pm_cover.hpp"

#include "rgraph/errors.hpp"

#include <algorithm>
#include <map>

namespace rgraph {

namespace {

bool covers_all(const Multigraph& g, const std::vector<EdgeId>& ids)
{
    return static_cast<int>(ids.size()) * 2 == g.vertex_count();
}

class PerfectMatchingEnumerator {
public:
    PerfectMatchingEnumerator(const Multigraph& g, std::optional<std::size_t> limit)
        : g_(g), limit_(limit), covered_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
    }

    std::vector<Matching> run()
    {
        if (g_.vertex_count() % 2 == 0)
            extend(0);
        return std::move(out_);
    }

private:
    bool full() const { return limit_ && out_.size() >= *limit_; }

    void extend(Vertex from)
    {
        if (full())
            return;
        Vertex v = from;
        while (v < g_.vertex_count() && covered_[static_cast<std::size_t>(v)])
            ++v;
        if (v == g_.vertex_count()) {
            Matching m;
            m.edge_ids = current_;
            std::sort(m.edge_ids.begin(), m.edge_ids.end());
            m.perfect = true;
            out_.push_back(std::move(m));
            return;
        }
        covered_[static_cast<std::size_t>(v)] = 1;
        for (EdgeId e : g_.incident(v)) {
            Vertex w = g_.other_end(e, v);
            if (covered_[static_cast<std::size_t>(w)])
                continue;
            covered_[static_cast<std::size_t>(w)] = 1;
            current_.push_back(e);
            extend(v + 1);
            current_.pop_back();
            covered_[static_cast<std::size_t>(w)] = 0;
            if (full())
                break;
        }
        covered_[static_cast<std::size_t>(v)] = 0;
    }

    const Multigraph& g_;
    std::optional<std::size_t> limit_;
    std::vector<char> covered_;
    std::vector<EdgeId> current_;
    std::vector<Matching> out_;
};

std::vector<EdgeId> symmetric_difference(const Matching& a, const Matching& b)
{
    std::vector<EdgeId> out;
    std::set_symmetric_difference(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end(),
                                  std::back_inserter(out));
    return out;
}

} // namespace

std::optional<Matching> make_matching(const Multigraph& g, std::vector<EdgeId> ids)
{
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        return std::nullopt;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : ids) {
        if (e < 0 || e >= g.edge_count())
            return std::nullopt;
        for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
            if (seen[static_cast<std::size_t>(v)])
                return std::nullopt;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    Matching m;
    m.perfect = covers_all(g, ids);
    m.edge_ids = std::move(ids);
    return m;
}

std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g, std::optional<std::size_t> limit)
{
    return PerfectMatchingEnumerator(g, limit).run();
}

std::vector<KempeChain> kempe_chains(const Multigraph& g, const Matching& m1, const Matching& m2)
{
    std::vector<EdgeId> diff = symmetric_difference(m1, m2);
    std::map<Vertex, std::vector<EdgeId>> at;
    for (EdgeId e : diff) {
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    }
    for (const auto& [v, es] : at)
        if (es.size() > 2)
            throw InvalidArgument("kempe_chains needs two matchings");

    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<KempeChain> chains;
    auto walk = [&](Vertex start) {
        KempeChain chain;
        Vertex v = start;
        while (true) {
            EdgeId next = -1;
            for (EdgeId e : at[v])
                if (!used[static_cast<std::size_t>(e)]) {
                    next = e;
                    break;
                }
            if (next < 0)
                break;
            used[static_cast<std::size_t>(next)] = 1;
            chain.edges.push_back(next);
            v = g.other_end(next, v);
        }
        return std::pair{chain, v};
    };
    // Paths first, from their smaller end; then cycles from their smallest vertex.
    for (const auto& [v, es] : at) {
        if (es.size() != 1 || used[static_cast<std::size_t>(es[0])])
            continue;
        auto [chain, end] = walk(v);
        chain.endpoints = {v, end};
        chains.push_back(std::move(chain));
    }
    for (const auto& [v, es] : at) {
        if (used[static_cast<std::size_t>(es[0])])
            continue;
        auto [chain, end] = walk(v);
        chain.is_cycle = true;
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end(), [](const KempeChain& a, const KempeChain& b) {
        return *std::min_element(a.edges.begin(), a.edges.end()) < *std::min_element(b.edges.begin(), b.edges.end());
    });
    return chains;
}

std::optional<KempeChain> kempe_chain_at(const Multigraph& g, const Matching& m1, const Matching& m2, Vertex v)
{
    for (KempeChain& c : kempe_chains(g, m1, m2))
        for (EdgeId e : c.edges)
            if (g.edge(e).u == v || g.edge(e).v == v)
                return std::move(c);
    return std::nullopt;
}

std::pair<Matching, Matching> kempe_switch(const Multigraph& g, const Matching& m1, const Matching& m2,
                                           const KempeChain& chain)
{
    std::vector<EdgeId> want = chain.edges;
    std::sort(want.begin(), want.end());
    bool found = false;
    for (const KempeChain& c : kempe_chains(g, m1, m2)) {
        std::vector<EdgeId> have = c.edges;
        std::sort(have.begin(), have.end());
        if (have == want) {
            found = true;
            break;
        }
    }
    if (!found)
        throw InvalidArgument("chain is not a component of the symmetric difference");

    auto swap_side = [&](const Matching& keep, const Matching& give) {
        std::vector<EdgeId> ids;
        for (EdgeId e : keep.edge_ids)
            if (!std::binary_search(want.begin(), want.end(), e))
                ids.push_back(e);
        for (EdgeId e : give.edge_ids)
            if (std::binary_search(want.begin(), want.end(), e))
                ids.push_back(e);
        auto m = make_matching(g, std::move(ids));
        if (!m)
            throw InternalDefect("kempe switch produced a non-matching");
        return *m;
    };
    return {swap_side(m1, m2), swap_side(m2, m1)};
}

} // namespace rgraph
