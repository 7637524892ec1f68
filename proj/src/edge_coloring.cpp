#include "rgraph/pm_cover.hpp"

#include "rgraph/errors.hpp"

#include <algorithm>

namespace rgraph {

namespace {

class EdgeColorer {
public:
    EdgeColorer(const Multigraph& g, int k, SearchBudget budget)
        : g_(g), k_(k), budget_(budget), colors_(static_cast<std::size_t>(g.edge_count()), -1),
          used_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
    }

    std::optional<EdgeColoring> run()
    {
        if (k_ < 1)
            throw InvalidArgument("edge_color needs k >= 1");
        if (k_ > 63)
            throw InvalidArgument("edge_color supports at most 63 colors");
        if (g_.edge_count() == 0)
            return EdgeColoring{k_, {}};
        if (g_.max_degree() > k_)
            return std::nullopt;
        if (!assign(0, -1))
            return std::nullopt;
        return EdgeColoring{k_, colors_};
    }

private:
    bool assign(EdgeId e, int max_used)
    {
        if (e == g_.edge_count())
            return true;
        if (++nodes_ > budget_.max_nodes)
            throw BudgetExceeded("edge coloring search exceeded its node budget");
        const Edge& ed = g_.edge(e);
        std::uint64_t blocked = used_[static_cast<std::size_t>(ed.u)] | used_[static_cast<std::size_t>(ed.v)];
        int lowest = 0;
        if (e > 0 && g_.edge(e - 1) == ed)
            lowest = colors_[static_cast<std::size_t>(e - 1)] + 1;
        int highest = std::min(max_used + 1, k_ - 1);
        for (int c = lowest; c <= highest; ++c) {
            std::uint64_t bit = std::uint64_t{1} << c;
            if (blocked & bit)
                continue;
            colors_[static_cast<std::size_t>(e)] = c;
            used_[static_cast<std::size_t>(ed.u)] |= bit;
            used_[static_cast<std::size_t>(ed.v)] |= bit;
            if (assign(e + 1, std::max(max_used, c)))
                return true;
            used_[static_cast<std::size_t>(ed.u)] &= ~bit;
            used_[static_cast<std::size_t>(ed.v)] &= ~bit;
        }
        colors_[static_cast<std::size_t>(e)] = -1;
        return false;
    }

    const Multigraph& g_;
    int k_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colors_;
    std::vector<std::uint64_t> used_;
};

} // namespace

std::optional<EdgeColoring> edge_color(const Multigraph& g, int k, SearchBudget budget)
{
    return EdgeColorer(g, k, budget).run();
}

std::vector<Matching> color_classes(const Multigraph& g, const EdgeColoring& coloring)
{
    std::vector<std::vector<EdgeId>> ids(static_cast<std::size_t>(coloring.k));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        ids.at(static_cast<std::size_t>(coloring.colors.at(static_cast<std::size_t>(e)))).push_back(e);
    std::vector<Matching> out;
    for (auto& c : ids) {
        auto m = make_matching(g, std::move(c));
        if (!m)
            throw InvalidArgument("coloring is not proper");
        out.push_back(std::move(*m));
    }
    return out;
}

PMCover cover_from_coloring(const Multigraph& g, const EdgeColoring& coloring, int t, int r)
{
    PMCover cover;
    cover.t = t;
    cover.r = r;
    auto classes = color_classes(g, coloring);
    for (const Matching& m : classes)
        for (int i = 0; i < t; ++i)
            cover.matchings.push_back(m);
    return cover;
}

} // namespace rgraph
