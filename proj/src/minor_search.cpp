#include "rgraph/minor_topology.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"

#include <bit>
#include <unordered_set>

namespace rgraph {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t memo_limit = 1u << 21;

struct State {
    std::vector<Mask> adj;
    std::vector<Mask> branch;

    int size() const { return static_cast<int>(adj.size()); }

    int edge_count() const
    {
        int twice = 0;
        for (Mask m : adj)
            twice += std::popcount(m);
        return twice / 2;
    }

    void remove(int v)
    {
        Mask low = (Mask{1} << v) - 1;
        for (Mask& m : adj)
            m = (m & low) | ((m >> 1) & ~low);
        adj.erase(adj.begin() + v);
        branch.erase(branch.begin() + v);
    }

    /// Merges v into u.
    void contract(int u, int v)
    {
        Mask nv = adj[static_cast<std::size_t>(v)];
        for (Mask rest = nv; rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            adj[static_cast<std::size_t>(w)] |= Mask{1} << u;
        }
        adj[static_cast<std::size_t>(u)] |= nv;
        adj[static_cast<std::size_t>(u)] &= ~((Mask{1} << u) | (Mask{1} << v));
        branch[static_cast<std::size_t>(u)] |= branch[static_cast<std::size_t>(v)];
        remove(v);
    }
};

State from_graph(const Multigraph& g)
{
    if (g.vertex_count() > 64)
        throw InvalidArgument("minor search supports at most 64 vertices");
    State s;
    s.adj.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    s.branch.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        s.branch[static_cast<std::size_t>(v)] = Mask{1} << v;
    for (const Edge& e : g.edges()) {
        s.adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        s.adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    return s;
}

void reduce(State& s)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < s.size(); ++v) {
            int d = std::popcount(s.adj[static_cast<std::size_t>(v)]);
            if (d <= 1) {
                s.remove(v);
                changed = true;
                break;
            }
            if (d == 2) {
                int u = std::countr_zero(s.adj[static_cast<std::size_t>(v)]);
                if (u < v)
                    s.contract(u, v);
                else
                    s.contract(v, u);
                changed = true;
                break;
            }
        }
    }
}

std::optional<std::vector<int>> k5_subgraph(const State& s)
{
    int n = s.size();
    for (int a = 0; a < n; ++a) {
        Mask ca = s.adj[static_cast<std::size_t>(a)] & ~((Mask{2} << a) - 1);
        for (Mask ra = ca; ra; ra &= ra - 1) {
            int b = std::countr_zero(ra);
            Mask cb = ca & s.adj[static_cast<std::size_t>(b)];
            for (Mask rb = cb; rb; rb &= rb - 1) {
                int c = std::countr_zero(rb);
                Mask cc = cb & s.adj[static_cast<std::size_t>(c)];
                for (Mask rc = cc; rc; rc &= rc - 1) {
                    int d = std::countr_zero(rc);
                    Mask cd = cc & s.adj[static_cast<std::size_t>(d)];
                    if (cd)
                        return std::vector<int>{a, b, c, d, std::countr_zero(cd)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> k33_subgraph(const State& s)
{
    int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Mask side = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c);
                Mask common = s.adj[static_cast<std::size_t>(a)] & s.adj[static_cast<std::size_t>(b)] &
                              s.adj[static_cast<std::size_t>(c)] & ~side;
                if (std::popcount(common) >= 3) {
                    std::vector<int> out{a, b, c};
                    for (int i = 0; i < 3; ++i) {
                        out.push_back(std::countr_zero(common));
                        common &= common - 1;
                    }
                    return out;
                }
            }
    return std::nullopt;
}

std::string memo_key(const State& s)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int v = 0; v < s.size(); ++v)
        for (Mask rest = s.adj[static_cast<std::size_t>(v)] & ~((Mask{2} << v) - 1); rest; rest &= rest - 1)
            pairs.emplace_back(v, std::countr_zero(rest));
    CanonicalForm f = canonical_form(Multigraph::from_pairs(s.size(), pairs));
    std::string key(static_cast<std::size_t>(f.n * f.n), '\0');
    for (std::size_t i = 0; i < f.matrix.size(); ++i)
        key[i] = static_cast<char>(f.matrix[i]);
    return key;
}

Mask all_of(int n)
{
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Vertices reachable from `start` inside `allowed`.
Mask reach(const State& s, int start, Mask allowed)
{
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask fresh = s.adj[static_cast<std::size_t>(v)] & allowed & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen;
}

std::vector<Mask> components_of(const State& s, Mask allowed)
{
    std::vector<Mask> out;
    for (Mask rest = allowed; rest;) {
        Mask c = reach(s, std::countr_zero(rest), allowed);
        out.push_back(c);
        rest &= ~c;
    }
    return out;
}

/// The minor of s obtained by contracting `merge` (connected to `into`) into
/// vertex `into` and deleting everything outside `keep`.
State quotient(const State& s, Mask keep, int into, Mask merge)
{
    State t = s;
    auto& a = t.adj[static_cast<std::size_t>(into)];
    for (Mask rest = merge; rest; rest &= rest - 1) {
        int c = std::countr_zero(rest);
        a |= s.adj[static_cast<std::size_t>(c)];
        t.branch[static_cast<std::size_t>(into)] |= s.branch[static_cast<std::size_t>(c)];
    }
    a &= ~(merge | (Mask{1} << into));
    for (Mask rest = a; rest; rest &= rest - 1)
        t.adj[static_cast<std::size_t>(std::countr_zero(rest))] |= Mask{1} << into;
    for (int v = t.size() - 1; v >= 0; --v)
        if (!(keep & (Mask{1} << v)))
            t.remove(v);
    return t;
}

/// Pieces whose minors cover every 3-connected minor of s: components,
/// blocks at a cut vertex, or the sides of a 2-vertex cut (each with the
/// other side contracted onto the cut to supply the virtual edge). Empty
/// when s is 3-connected.
std::vector<State> split_pieces(const State& s)
{
    int n = s.size();
    Mask everything = all_of(n);
    std::vector<State> out;
    auto comps = components_of(s, everything);
    if (comps.size() > 1) {
        for (Mask c : comps)
            out.push_back(quotient(s, c, std::countr_zero(c), 0));
        return out;
    }
    for (int v = 0; v < n; ++v) {
        Mask without = everything & ~(Mask{1} << v);
        auto parts = components_of(s, without);
        if (parts.size() > 1) {
            for (Mask c : parts)
                out.push_back(quotient(s, c | (Mask{1} << v), v, 0));
            return out;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Mask cut = (Mask{1} << a) | (Mask{1} << b);
            auto parts = components_of(s, everything & ~cut);
            if (parts.size() < 2)
                continue;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                Mask other = parts[i == 0 ? 1 : 0];
                out.push_back(quotient(s, parts[i] | cut, a, other));
            }
            return out;
        }
    return out;
}

class MinorSearch {
public:
    explicit MinorSearch(Forbidden target) : target_(target), failed_(failures(target)) {}

    std::optional<std::vector<Mask>> run(State s) { return search(std::move(s)); }

private:
    static std::unordered_set<std::string>& failures(Forbidden target)
    {
        thread_local std::unordered_set<std::string> k5, k33;
        auto& set = target == Forbidden::K5 ? k5 : k33;
        if (set.size() > memo_limit)
            set.clear();
        return set;
    }

    std::optional<std::vector<Mask>> search(State s)
    {
        reduce(s);
        int need_n = target_ == Forbidden::K5 ? 5 : 6;
        int need_m = target_ == Forbidden::K5 ? 10 : 9;
        int need_rank = target_ == Forbidden::K5 ? 6 : 4;
        int m = s.edge_count();
        if (s.size() < need_n || m < need_m)
            return std::nullopt;
        // Minors never raise the cycle rank m - n + c.
        int rank = m - s.size() + static_cast<int>(components_of(s, all_of(s.size())).size());
        if (rank < need_rank)
            return std::nullopt;
        auto hit = target_ == Forbidden::K5 ? k5_subgraph(s) : k33_subgraph(s);
        if (hit) {
            std::vector<Mask> sets;
            for (int v : *hit)
                sets.push_back(s.branch[static_cast<std::size_t>(v)]);
            return sets;
        }
        std::string key = memo_key(s);
        if (failed_.count(key))
            return std::nullopt;
        auto found = expand(s);
        if (!found)
            failed_.insert(std::move(key));
        return found;
    }

    std::optional<std::vector<Mask>> expand(const State& s)
    {
        auto pieces = split_pieces(s);
        if (!pieces.empty()) {
            for (State& p : pieces)
                if (auto found = search(std::move(p)))
                    return found;
            return std::nullopt;
        }
        int v = 0;
        for (int w = 1; w < s.size(); ++w)
            if (std::popcount(s.adj[static_cast<std::size_t>(w)]) < std::popcount(s.adj[static_cast<std::size_t>(v)]))
                v = w;
        Mask nv = s.adj[static_cast<std::size_t>(v)];
        if (target_ == Forbidden::K5 && std::popcount(nv) == 3) {
            // A degree-3 vertex is never a whole K5 branch set.
            State gone = s;
            gone.remove(v);
            if (auto found = search(std::move(gone)))
                return found;
            for (Mask rest = nv; rest; rest &= rest - 1) {
                State merged = s;
                merged.contract(std::min(v, std::countr_zero(rest)), std::max(v, std::countr_zero(rest)));
                if (auto found = search(std::move(merged)))
                    return found;
            }
            return std::nullopt;
        }
        for (int x = 0; x < s.size(); ++x)
            for (Mask rest = s.adj[static_cast<std::size_t>(x)] & ~((Mask{2} << x) - 1); rest; rest &= rest - 1) {
                State merged = s;
                merged.contract(x, std::countr_zero(rest));
                if (auto found = search(std::move(merged)))
                    return found;
            }
        return std::nullopt;
    }

    Forbidden target_;
    std::unordered_set<std::string>& failed_;
};

bool connected_within(const Multigraph& g, const VertexSet& set)
{
    if (set.empty())
        return false;
    Mask inside = to_mask(set);
    Mask seen = Mask{1} << set.front();
    std::vector<Vertex> stack{set.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v)) {
            Mask bit = Mask{1} << w;
            if ((inside & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(w);
            }
        }
    }
    return seen == inside;
}

bool sets_touch(const Multigraph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex v : a)
        for (Vertex w : b)
            if (g.multiplicity(v, w) > 0)
                return true;
    return false;
}

} // namespace

std::optional<MinorModel> find_minor(const Multigraph& g, Forbidden target)
{
    MinorSearch search(target);
    auto sets = search.run(from_graph(underlying_simple(g)));
    if (!sets)
        return std::nullopt;
    MinorModel model;
    model.target = target;
    for (Mask m : *sets)
        model.branch_sets.push_back(from_mask(m));
    if (!is_minor_model(g, model))
        throw InternalDefect("minor search produced an invalid model");
    return model;
}

bool has_k5_minor(const Multigraph& g)
{
    return find_minor(g, Forbidden::K5).has_value();
}

bool has_k33_minor(const Multigraph& g)
{
    return find_minor(g, Forbidden::K33).has_value();
}

bool is_minor_model(const Multigraph& g, const MinorModel& model)
{
    std::size_t want = model.target == Forbidden::K5 ? 5 : 6;
    if (model.branch_sets.size() != want)
        return false;
    Mask used = 0;
    for (const VertexSet& set : model.branch_sets) {
        for (Vertex v : set)
            if (v < 0 || v >= g.vertex_count())
                return false;
        Mask m = to_mask(set);
        if (m & used)
            return false;
        used |= m;
        if (!connected_within(g, set))
            return false;
    }
    for (std::size_t i = 0; i < want; ++i)
        for (std::size_t j = i + 1; j < want; ++j) {
            bool needed = model.target == Forbidden::K5 || (i < 3) != (j < 3);
            if (needed && !sets_touch(g, model.branch_sets[i], model.branch_sets[j]))
                return false;
        }
    return true;
}

} // namespace rgraph
