#include "rgraph/pm_cover.hpp"

#include "rgraph/errors.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <algorithm>

namespace rgraph {

namespace {

/// Multiset cover: pick columns (with repetition) so that each row is hit
/// exactly demand[row] times.
class ExactMultisetCover {
public:
    ExactMultisetCover(std::vector<std::vector<int>> columns, std::vector<int> demand, SearchBudget budget)
        : columns_(std::move(columns)), demand_(std::move(demand)), budget_(budget),
          rows_(demand_.size())
    {
        for (std::size_t c = 0; c < columns_.size(); ++c)
            for (int row : columns_[c])
                rows_[static_cast<std::size_t>(row)].push_back(static_cast<int>(c));
        count_.assign(columns_.size(), 0);
    }

    std::optional<std::vector<int>> run()
    {
        if (solve())
            return count_;
        return std::nullopt;
    }

private:
    bool column_fits(int c) const
    {
        for (int row : columns_[static_cast<std::size_t>(c)])
            if (demand_[static_cast<std::size_t>(row)] == 0)
                return false;
        return true;
    }

    void apply(int c, int delta)
    {
        for (int row : columns_[static_cast<std::size_t>(c)])
            demand_[static_cast<std::size_t>(row)] -= delta;
        count_[static_cast<std::size_t>(c)] += delta;
    }

    bool solve()
    {
        int best = -1;
        std::size_t best_options = 0;
        for (std::size_t row = 0; row < demand_.size(); ++row) {
            if (demand_[row] == 0)
                continue;
            std::size_t options = 0;
            for (int c : rows_[row])
                if (column_fits(c))
                    ++options;
            if (options == 0)
                return false;
            if (best < 0 || options < best_options) {
                best = static_cast<int>(row);
                best_options = options;
            }
        }
        if (best < 0)
            return true;
        return fill(best, 0);
    }

    /// Places demand_[row] more columns through `row`, with non-decreasing
    /// positions in rows_[row] so each multiset is tried once.
    bool fill(int row, std::size_t from)
    {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetExceeded("(t,r)-PM search exceeded its node budget");
        if (demand_[static_cast<std::size_t>(row)] == 0)
            return solve();
        const auto& options = rows_[static_cast<std::size_t>(row)];
        for (std::size_t i = from; i < options.size(); ++i) {
            int c = options[i];
            if (!column_fits(c))
                continue;
            apply(c, 1);
            if (fill(row, i))
                return true;
            apply(c, -1);
        }
        return false;
    }

    std::vector<std::vector<int>> columns_;
    std::vector<int> demand_;
    SearchBudget budget_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> count_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<PMCover> find_tr_pm(const Multigraph& g, int t, int r, SearchBudget budget)
{
    if (t < 1)
        throw InvalidArgument("t must be at least 1");
    if (!verify_r_graph(g, r).is_r_graph)
        throw PreconditionViolation("find_tr_pm needs an r-graph");

    Multigraph s = underlying_simple(g);
    std::vector<Matching> pms = enumerate_perfect_matchings(s);
    std::vector<std::vector<int>> columns;
    for (const Matching& m : pms)
        columns.emplace_back(m.edge_ids.begin(), m.edge_ids.end());
    std::vector<int> demand;
    for (const Edge& e : s.edges())
        demand.push_back(t * g.multiplicity(e.u, e.v));

    auto counts = ExactMultisetCover(std::move(columns), std::move(demand), budget).run();
    if (!counts)
        return std::nullopt;

    // Hand out parallel copies round-robin: the k-th use of a simple edge
    // takes copy k mod mu.
    std::vector<std::vector<EdgeId>> copies;
    for (const Edge& e : s.edges())
        copies.push_back(g.edges_between(e.u, e.v));
    std::vector<std::size_t> next(copies.size(), 0);

    PMCover cover;
    cover.t = t;
    cover.r = r;
    for (std::size_t c = 0; c < pms.size(); ++c) {
        for (int rep = 0; rep < (*counts)[c]; ++rep) {
            std::vector<EdgeId> ids;
            for (EdgeId se : pms[c].edge_ids) {
                auto& pool = copies[static_cast<std::size_t>(se)];
                ids.push_back(pool[next[static_cast<std::size_t>(se)]++ % pool.size()]);
            }
            auto m = make_matching(g, std::move(ids));
            if (!m || !m->perfect)
                throw InternalDefect("lifted matching is not perfect");
            cover.matchings.push_back(std::move(*m));
        }
    }
    return cover;
}

CoverCheck validate_tr_pm(const Multigraph& g, const PMCover& cover)
{
    CoverCheck check;
    auto fail = [&](std::string reason) { check.reasons.push_back(std::move(reason)); };
    if (cover.t < 1)
        fail("t must be positive");
    if (cover.r < 1)
        fail("r must be positive");
    if (static_cast<long>(cover.matchings.size()) != static_cast<long>(cover.t) * cover.r)
        fail("cover has " + std::to_string(cover.matchings.size()) + " matchings, expected t*r = " +
             std::to_string(cover.t * cover.r));

    std::vector<int> hits(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < cover.matchings.size(); ++i) {
        const auto& ids = cover.matchings[i].edge_ids;
        std::vector<int> touched(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<char> listed(static_cast<std::size_t>(g.edge_count()), 0);
        bool sane = true;
        for (EdgeId e : ids) {
            if (e < 0 || e >= g.edge_count()) {
                fail("matching " + std::to_string(i) + " references unknown edge " + std::to_string(e));
                sane = false;
                continue;
            }
            if (listed[static_cast<std::size_t>(e)]) {
                fail("matching " + std::to_string(i) + " lists edge " + std::to_string(e) + " twice");
                sane = false;
                continue;
            }
            listed[static_cast<std::size_t>(e)] = 1;
            ++hits[static_cast<std::size_t>(e)];
            ++touched[static_cast<std::size_t>(g.edge(e).u)];
            ++touched[static_cast<std::size_t>(g.edge(e).v)];
        }
        if (!sane)
            continue;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int c = touched[static_cast<std::size_t>(v)];
            if (c > 1) {
                fail("matching " + std::to_string(i) + " has two edges at vertex " + std::to_string(v));
                break;
            }
            if (c == 0) {
                fail("matching " + std::to_string(i) + " misses vertex " + std::to_string(v));
                break;
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (hits[static_cast<std::size_t>(e)] != cover.t)
            fail("edge " + std::to_string(e) + " is covered " + std::to_string(hits[static_cast<std::size_t>(e)]) +
                 " times, expected " + std::to_string(cover.t));
    check.ok = check.reasons.empty();
    return check;
}

} // namespace rgraph
