#pragma once

// Brute-force reference checks. Each works straight from the edge list and
// shares no code with the library routines it is compared against.

#include "rgraph/multigraph.hpp"
#include "rgraph/pm_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using rgraph::EdgeId;
using rgraph::Multigraph;
using rgraph::Vertex;

inline int boundary_size(const Multigraph& g, std::uint64_t side)
{
    int count = 0;
    for (const auto& e : g.edges())
        if (((side >> e.u) & 1) != ((side >> e.v) & 1))
            ++count;
    return count;
}

inline std::vector<int> degrees(const Multigraph& g)
{
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : g.edges()) {
        ++d[static_cast<std::size_t>(e.u)];
        ++d[static_cast<std::size_t>(e.v)];
    }
    return d;
}

/// r-regular and every odd vertex set has at least r boundary edges.
inline bool is_r_graph(const Multigraph& g, int r)
{
    int n = g.vertex_count();
    if (n == 0)
        return false;
    for (int d : degrees(g))
        if (d != r)
            return false;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x)
        if (std::popcount(x) % 2 == 1 && boundary_size(g, x) < r)
            return false;
    return true;
}

inline bool is_nontrivial_tight(const Multigraph& g, const std::vector<Vertex>& side, int r)
{
    std::uint64_t x = 0;
    for (Vertex v : side)
        x |= std::uint64_t{1} << v;
    int k = std::popcount(x);
    return k % 2 == 1 && k > 1 && g.vertex_count() - k > 1 && boundary_size(g, x) == r;
}

inline bool is_connected(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n == 0)
        return true;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    int groups = n;
    for (const auto& e : g.edges()) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --groups;
        }
    }
    return groups == 1;
}

inline std::vector<int> multiplicity_matrix(const Multigraph& g)
{
    int n = g.vertex_count();
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (const auto& e : g.edges()) {
        ++m[static_cast<std::size_t>(e.u * n + e.v)];
        ++m[static_cast<std::size_t>(e.v * n + e.u)];
    }
    return m;
}

/// Tries every vertex permutation.
inline bool isomorphic(const Multigraph& g, const Multigraph& h)
{
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    auto a = multiplicity_matrix(g);
    auto b = multiplicity_matrix(h);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool same = true;
        for (int i = 0; i < n && same; ++i)
            for (int j = 0; j < n && same; ++j)
                same = a[static_cast<std::size_t>(i * n + j)] ==
                       b[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] * n + p[static_cast<std::size_t>(j)])];
        if (same)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool is_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& ids)
{
    std::vector<int> hit(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : ids) {
        if (e < 0 || e >= g.edge_count())
            return false;
        ++hit[static_cast<std::size_t>(g.edge(e).u)];
        ++hit[static_cast<std::size_t>(g.edge(e).v)];
    }
    return std::all_of(hit.begin(), hit.end(), [](int c) { return c == 1; });
}

/// Every n/2-subset of the edges.
inline std::vector<std::vector<EdgeId>> perfect_matchings(const Multigraph& g)
{
    std::vector<std::vector<EdgeId>> out;
    int n = g.vertex_count(), m = g.edge_count();
    if (n % 2 != 0)
        return out;
    std::vector<EdgeId> pick;
    auto rec = [&](auto&& self, EdgeId from) -> void {
        if (static_cast<int>(pick.size()) == n / 2) {
            if (is_perfect_matching(g, pick))
                out.push_back(pick);
            return;
        }
        for (EdgeId e = from; e < m; ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool cover_is_valid(const Multigraph& g, const rgraph::PMCover& cover)
{
    if (cover.t < 1 || static_cast<int>(cover.matchings.size()) != cover.t * cover.r)
        return false;
    std::vector<int> used(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& m : cover.matchings) {
        if (!is_perfect_matching(g, m.edge_ids))
            return false;
        for (EdgeId e : m.edge_ids)
            ++used[static_cast<std::size_t>(e)];
    }
    return std::all_of(used.begin(), used.end(), [&](int c) { return c == cover.t; });
}

inline bool is_proper_coloring(const Multigraph& g, const std::vector<int>& colors, int k)
{
    if (static_cast<int>(colors.size()) != g.edge_count())
        return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (colors[static_cast<std::size_t>(e)] < 0 || colors[static_cast<std::size_t>(e)] >= k)
            return false;
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            const auto& a = g.edge(e);
            const auto& b = g.edge(f);
            bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (touch && colors[static_cast<std::size_t>(e)] == colors[static_cast<std::size_t>(f)])
                return false;
        }
    }
    return true;
}

/// Plain backtracking over all k colors per edge.
inline bool colorable(const Multigraph& g, int k)
{
    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), -1);
    auto ok_at = [&](EdgeId e) {
        for (EdgeId f = 0; f < e; ++f) {
            const auto& a = g.edge(e);
            const auto& b = g.edge(f);
            bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (touch && colors[static_cast<std::size_t>(f)] == colors[static_cast<std::size_t>(e)])
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, EdgeId e) -> bool {
        if (e == g.edge_count())
            return true;
        for (int c = 0; c < k; ++c) {
            colors[static_cast<std::size_t>(e)] = c;
            if (ok_at(e) && self(self, e + 1))
                return true;
        }
        colors[static_cast<std::size_t>(e)] = -1;
        return false;
    };
    return rec(rec, 0);
}

/// Minor test by assigning every vertex a branch label or none; only for
/// tiny graphs. `target` is the adjacency of H on h vertices.
inline bool has_minor(const Multigraph& g, int h, const std::vector<std::pair<int, int>>& target)
{
    int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    auto check = [&] {
        for (int b = 0; b < h; ++b) {
            std::vector<Vertex> members;
            for (int v = 0; v < n; ++v)
                if (label[static_cast<std::size_t>(v)] == b)
                    members.push_back(v);
            if (members.empty())
                return false;
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            std::vector<Vertex> stack{members[0]};
            seen[static_cast<std::size_t>(members[0])] = true;
            std::size_t reached = 1;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (const auto& e : g.edges()) {
                    Vertex w = e.u == v ? e.v : e.v == v ? e.u : -1;
                    if (w >= 0 && !seen[static_cast<std::size_t>(w)] && label[static_cast<std::size_t>(w)] == b) {
                        seen[static_cast<std::size_t>(w)] = true;
                        ++reached;
                        stack.push_back(w);
                    }
                }
            }
            if (reached != members.size())
                return false;
        }
        for (auto [a, b] : target) {
            bool touch = false;
            for (const auto& e : g.edges()) {
                int la = label[static_cast<std::size_t>(e.u)], lb = label[static_cast<std::size_t>(e.v)];
                if ((la == a && lb == b) || (la == b && lb == a))
                    touch = true;
            }
            if (!touch)
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n)
            return check();
        for (int b = -1; b < h; ++b) {
            label[static_cast<std::size_t>(v)] = b;
            if (self(self, v + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline std::vector<std::pair<int, int>> k5_edges()
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            out.emplace_back(a, b);
    return out;
}

inline std::vector<std::pair<int, int>> k33_edges()
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            out.emplace_back(a, b);
    return out;
}

} // namespace oracle
