#include "rgraph/lifting.hpp"

#include "rgraph/errors.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace rgraph {

namespace {

struct PairChoice {
    Vertex y;
    Vertex z;
};

class LiftSearch {
public:
    LiftSearch(const Multigraph& g, const VertexSet& x, int r, std::uint64_t seed)
        : g_(g), x_(normalize(x)), r_(r), con_(contract(g, x_))
    {
        w_ = con_.contracted_vertex;
        for (Vertex y : con_.graph.neighbours(w_)) {
            nbrs_.push_back(y);
            cap_.push_back(con_.graph.multiplicity(w_, y));
        }
        for (std::size_t i = 0; i < nbrs_.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs_.size(); ++j)
                pairs_.emplace_back(i, j);
        std::mt19937_64 rng(seed);
        std::shuffle(pairs_.begin(), pairs_.end(), rng);
        steps_ = lifting_step_count(g, x_, r);
        even_ = x_.size() % 2 == 0;
    }

    std::optional<LiftingPlan> run()
    {
        chosen_.clear();
        if (search(0, steps_))
            return build(chosen_);
        return std::nullopt;
    }

private:
    bool feasible(int remaining) const
    {
        if (!even_)
            return true;
        int total = std::accumulate(cap_.begin(), cap_.end(), 0);
        int biggest = cap_.empty() ? 0 : *std::max_element(cap_.begin(), cap_.end());
        return total == 2 * remaining && biggest <= remaining;
    }

    bool search(std::size_t from, int remaining)
    {
        if (!feasible(remaining))
            return false;
        if (remaining == 0)
            return accept();
        for (std::size_t p = from; p < pairs_.size(); ++p) {
            auto [i, j] = pairs_[p];
            if (cap_[i] == 0 || cap_[j] == 0)
                continue;
            --cap_[i];
            --cap_[j];
            chosen_.push_back(p);
            bool ok = search(p, remaining - 1);
            ++cap_[i];
            ++cap_[j];
            if (ok)
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    LiftingPlan build(const std::vector<std::size_t>& picks) const
    {
        std::vector<std::tuple<Vertex, Vertex, int>> counts;
        for (std::size_t p : picks) {
            auto [i, j] = pairs_[p];
            counts.emplace_back(nbrs_[i], nbrs_[j], 1);
        }
        return lifting_plan_from_pairs(g_, x_, r_, counts, even_);
    }

    bool accept()
    {
        LiftResult res = apply_lifting(g_, build(chosen_));
        return is_connected(res.graph) && verify_r_graph(res.graph, r_).is_r_graph;
    }

    const Multigraph& g_;
    VertexSet x_;
    int r_;
    Contraction con_;
    Vertex w_ = 0;
    std::vector<Vertex> nbrs_;
    std::vector<int> cap_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::size_t> chosen_;
    int steps_ = 0;
    bool even_ = false;
};

} // namespace

int lifting_step_count(const Multigraph& g, const VertexSet& x, int r)
{
    auto cut = static_cast<int>(boundary(g, x, r).boundary.size());
    if (x.size() % 2 == 0)
        return cut / 2;
    if (cut < r || (cut - r) % 2 != 0)
        throw PreconditionViolation("odd side has a boundary incompatible with an r-graph");
    return (cut - r) / 2;
}

LiftingPlan plan_lifting(const Multigraph& g, const VertexSet& x, int r, std::uint64_t seed)
{
    if (r < 2)
        throw PreconditionViolation("lifting needs r >= 2");
    if (!is_connected(g) || !verify_r_graph(g, r).is_r_graph)
        throw PreconditionViolation("plan_lifting needs a connected r-graph");
    LiftSearch search(g, x, r, seed);
    auto plan = search.run();
    if (!plan)
        throw InternalDefect("no lifting sequence yields a connected r-graph");
    return *plan;
}

LiftingPlan lifting_plan_from_pairs(const Multigraph& g, const VertexSet& x, int r,
                                    const std::vector<std::tuple<Vertex, Vertex, int>>& pairs,
                                    bool delete_vertex_after)
{
    LiftingPlan plan;
    plan.x = normalize(x);
    plan.r = r;
    plan.delete_vertex_after = delete_vertex_after;
    Contraction con = contract(g, plan.x);
    plan.at = con.contracted_vertex;
    std::map<Vertex, std::vector<EdgeId>> free;
    for (EdgeId e : con.graph.incident(plan.at))
        free[con.graph.other_end(e, plan.at)].push_back(e);
    for (auto& [v, ids] : free)
        std::sort(ids.begin(), ids.end(), std::greater<>());
    auto take = [&](Vertex v) {
        auto it = free.find(v);
        if (it == free.end() || it->second.empty())
            throw InvalidPlan("not enough edges between w and " + std::to_string(v));
        EdgeId e = it->second.back();
        it->second.pop_back();
        return e;
    };
    for (auto [y, z, count] : pairs) {
        for (int c = 0; c < count; ++c) {
            LiftStep s{y, z, 0, 0};
            s.e1 = take(y);
            s.e2 = take(z);
            plan.steps.push_back(s);
        }
    }
    return plan;
}

LiftResult apply_lifting(const Multigraph& g, const LiftingPlan& plan)
{
    Contraction con = contract(g, plan.x);
    const Multigraph& h = con.graph;
    Vertex w = con.contracted_vertex;
    if (plan.at != w)
        throw InvalidPlan("plan is anchored at a different vertex");
    std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
    std::vector<EdgeId> removed;
    std::vector<std::pair<Vertex, Vertex>> extra;
    auto consume = [&](EdgeId e, Vertex end) {
        if (e < 0 || e >= h.edge_count())
            throw InvalidPlan("edge id out of range");
        if (used[static_cast<std::size_t>(e)])
            throw InvalidPlan("edge " + std::to_string(e) + " already lifted");
        const Edge& ed = h.edge(e);
        if (!((ed.u == w && ed.v == end) || (ed.v == w && ed.u == end)))
            throw InvalidPlan("edge " + std::to_string(e) + " does not join w and " + std::to_string(end));
        used[static_cast<std::size_t>(e)] = 1;
        removed.push_back(e);
    };
    for (const LiftStep& s : plan.steps) {
        if (s.y == s.z || s.y == w || s.z == w)
            throw InvalidPlan("lifting needs two distinct neighbours of w");
        consume(s.e1, s.y);
        consume(s.e2, s.z);
        extra.emplace_back(s.y, s.z);
    }

    std::vector<std::optional<EdgeId>> after_removal;
    Multigraph cut_down = without_edges(h, removed, &after_removal);
    std::vector<EdgeId> old_to_new, added;
    Multigraph lifted = with_added_edges(cut_down, extra, &old_to_new, &added);

    LiftResult res;
    res.vertex_map = con.vertex_map;
    std::vector<std::optional<EdgeId>> h_to_final(static_cast<std::size_t>(h.edge_count()));
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (auto mid = after_removal[static_cast<std::size_t>(e)])
            h_to_final[static_cast<std::size_t>(e)] = old_to_new[static_cast<std::size_t>(*mid)];

    if (plan.delete_vertex_after) {
        if (lifted.degree(w) != 0)
            throw InvalidPlan("w still has edges and cannot be deleted");
        VertexSet keep(static_cast<std::size_t>(w));
        std::iota(keep.begin(), keep.end(), 0);
        std::vector<std::optional<EdgeId>> drop_map;
        Multigraph smaller = induced_subgraph(lifted, keep, &drop_map);
        for (auto& e : h_to_final)
            if (e)
                e = drop_map[static_cast<std::size_t>(*e)];
        for (auto& e : added)
            e = *drop_map[static_cast<std::size_t>(e)];
        for (auto& v : res.vertex_map)
            if (v == w)
                v = -1;
        lifted = std::move(smaller);
    }

    res.graph = std::move(lifted);
    res.added = std::move(added);
    res.edge_map.assign(static_cast<std::size_t>(g.edge_count()), std::nullopt);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto c = con.edge_map[static_cast<std::size_t>(e)])
            res.edge_map[static_cast<std::size_t>(e)] = h_to_final[static_cast<std::size_t>(*c)];
    return res;
}

} // namespace rgraph
