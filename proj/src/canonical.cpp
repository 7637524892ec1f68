#include "rgraph/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace rgraph {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
public:
    explicit Canonizer(const Multigraph& g) : n_(g.vertex_count()), mu_(static_cast<std::size_t>(n_ * n_), 0)
    {
        for (const Edge& e : g.edges()) {
            ++at(e.u, e.v);
            ++at(e.v, e.u);
        }
    }

    CanonicalForm run()
    {
        CanonicalForm form;
        form.n = n_;
        if (n_ == 0)
            return form;
        Cells cells{std::vector<Vertex>(static_cast<std::size_t>(n_))};
        std::iota(cells[0].begin(), cells[0].end(), 0);
        std::vector<Vertex> path;
        search(std::move(cells), path);
        form.matrix = std::move(best_matrix_);
        form.labeling = std::move(best_labeling_);
        return form;
    }

private:
    int& at(Vertex a, Vertex b) { return mu_[static_cast<std::size_t>(a * n_ + b)]; }
    int get(Vertex a, Vertex b) const { return mu_[static_cast<std::size_t>(a * n_ + b)]; }

    // Equitable refinement; splits are ordered by the (label-invariant) key.
    void refine(Cells& cells) const
    {
        bool changed = true;
        std::vector<std::pair<long, Vertex>> keyed;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() == 1)
                        continue;
                    keyed.clear();
                    for (Vertex v : cells[c]) {
                        long key = 0;
                        for (Vertex u : cells[s])
                            key += get(v, u);
                        keyed.emplace_back(key, v);
                    }
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first)
                        continue;
                    Cells parts;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first)
                            parts.emplace_back();
                        parts.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void leaf(const Cells& cells)
    {
        std::vector<Vertex> labeling;
        labeling.reserve(static_cast<std::size_t>(n_));
        for (const auto& c : cells)
            labeling.push_back(c.front());
        std::vector<int> matrix(static_cast<std::size_t>(n_ * n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                matrix[static_cast<std::size_t>(i * n_ + j)] =
                    get(labeling[static_cast<std::size_t>(i)], labeling[static_cast<std::size_t>(j)]);
        if (best_labeling_.empty() || matrix < best_matrix_) {
            best_matrix_ = std::move(matrix);
            best_labeling_ = std::move(labeling);
        } else if (matrix == best_matrix_) {
            std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                gamma[static_cast<std::size_t>(labeling[static_cast<std::size_t>(i)])] =
                    best_labeling_[static_cast<std::size_t>(i)];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    static Vertex find(std::vector<Vertex>& parent, Vertex v)
    {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    }

    // Orbit representatives of the group generated by the automorphisms
    // found so far that fix `path` pointwise.
    std::vector<Vertex> orbits(const std::vector<Vertex>& path)
    {
        std::vector<Vertex> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(),
                                     [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes)
                continue;
            for (Vertex v = 0; v < n_; ++v) {
                Vertex a = find(parent, v), b = find(parent, gamma[static_cast<std::size_t>(v)]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v)
            parent[static_cast<std::size_t>(v)] = find(parent, v);
        return parent;
    }

    void search(Cells cells, std::vector<Vertex>& path)
    {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
                target = i;
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<Vertex> candidates = cells[target];
        std::sort(candidates.begin(), candidates.end());
        std::vector<Vertex> explored;
        for (Vertex v : candidates) {
            if (!explored.empty() && !automorphisms_.empty()) {
                auto rep = orbits(path);
                bool seen = std::any_of(explored.begin(), explored.end(), [&](Vertex u) {
                    return rep[static_cast<std::size_t>(u)] == rep[static_cast<std::size_t>(v)];
                });
                if (seen)
                    continue;
            }
            Cells next = cells;
            std::vector<Vertex> rest;
            for (Vertex u : cells[target])
                if (u != v)
                    rest.push_back(u);
            next[target] = {v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            path.push_back(v);
            search(std::move(next), path);
            path.pop_back();
            explored.push_back(v);
        }
    }

    int n_;
    std::vector<int> mu_;
    std::vector<int> best_matrix_;
    std::vector<Vertex> best_labeling_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

} // namespace

CanonicalForm canonical_form(const Multigraph& g)
{
    return Canonizer(g).run();
}

Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& perm)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        pairs.emplace_back(perm.at(static_cast<std::size_t>(e.u)), perm.at(static_cast<std::size_t>(e.v)));
    return Multigraph::from_pairs(g.vertex_count(), pairs);
}

Multigraph canonical_relabel(const Multigraph& g)
{
    CanonicalForm form = canonical_form(g);
    std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < form.labeling.size(); ++i)
        perm[static_cast<std::size_t>(form.labeling[i])] = static_cast<Vertex>(i);
    return relabel(g, perm);
}

bool is_isomorphic_to(const Multigraph& g, const Multigraph& h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    auto degrees = [](const Multigraph& x) {
        std::vector<int> d;
        for (Vertex v = 0; v < x.vertex_count(); ++v)
            d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h))
        return false;
    return canonical_form(g).same_graph_as(canonical_form(h));
}

} // namespace rgraph
