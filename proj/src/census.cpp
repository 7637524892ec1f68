#include "rgraph/census.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/graph_io.hpp"
#include "rgraph/pm_cover.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace rgraph {

namespace {

// Fills the multiplicity matrix row by row. Labelings are restricted to
// breadth-first orders: every vertex after 0 is first reached from the
// lowest-numbered row that touches it, and newly reached vertices take the
// next free labels in order. Every connected graph has such a labeling.
class RegularFill {
public:
    RegularFill(int n, int r, int max_mu) : n_(n), r_(r), mu_(max_mu), m_(n * n, 0), deg_(n, 0) {}

    std::vector<Multigraph> run()
    {
        row(0, 1);
        std::vector<Multigraph> out;
        for (auto& [text, g] : found_)
            out.push_back(std::move(g));
        return out;
    }

private:
    void row(int i, int reached)
    {
        if (i == n_) {
            if (reached == n_)
                emit();
            return;
        }
        if (reached <= i)
            return;
        fill(i, i + 1, r_ - deg_[i], reached, reached);
    }

    // Distributes `left` edges of row i over columns j..n-1. Columns below
    // `reached` were reached by earlier rows; new columns must follow on
    // from `reached` without gaps, and `next` is one past the last of them.
    void fill(int i, int j, int left, int reached, int next)
    {
        if (left == 0) {
            row(i + 1, next);
            return;
        }
        if (j == n_ || (j >= reached && j != next))
            return;
        int cap = std::min({mu_, left, r_ - deg_[j]});
        int low = j >= reached ? 1 : 0;
        for (int k = cap; k >= low; --k) {
            set(i, j, k);
            fill(i, j + 1, left - k, reached, j >= reached ? j + 1 : next);
            set(i, j, 0);
        }
    }

    void set(int i, int j, int k)
    {
        int old = m_[i * n_ + j];
        m_[i * n_ + j] = k;
        m_[j * n_ + i] = k;
        deg_[i] += k - old;
        deg_[j] += k - old;
    }

    void emit()
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for (int k = 0; k < m_[a * n_ + b]; ++k)
                    pairs.emplace_back(a, b);
        Multigraph g = canonical_relabel(Multigraph::from_pairs(n_, pairs));
        std::string text = format_graph(g);
        found_.emplace(std::move(text), std::move(g));
    }

    int n_, r_, mu_;
    std::vector<int> m_;
    std::vector<int> deg_;
    std::map<std::string, Multigraph> found_;
};

} // namespace

std::vector<Multigraph> regular_multigraphs(int n, int r, int max_mu)
{
    if (n < 1 || r < 0 || max_mu < 1)
        throw InvalidArgument("regular_multigraphs: need n >= 1, r >= 0, max_mu >= 1");
    if (n == 1)
        return r == 0 ? std::vector<Multigraph>{Multigraph::from_pairs(1, {})} : std::vector<Multigraph>{};
    if ((n * r) % 2 != 0)
        return {};
    return RegularFill(n, r, max_mu).run();
}

std::vector<Multigraph> simple_graphs(int n)
{
    if (n < 0)
        throw InvalidArgument("simple_graphs: n must be non-negative");
    std::vector<Multigraph> level{Multigraph::from_pairs(0, {})};
    for (int size = 1; size <= n; ++size) {
        std::map<std::string, Multigraph> next;
        for (const Multigraph& g : level) {
            int old = size - 1;
            auto base = g.endpoint_pairs();
            for (std::uint32_t mask = 0; mask < (1u << old); ++mask) {
                auto pairs = base;
                for (int v = 0; v < old; ++v)
                    if (mask & (1u << v))
                        pairs.emplace_back(v, old);
                Multigraph h = canonical_relabel(Multigraph::from_pairs(size, pairs));
                std::string text = format_graph(h);
                next.try_emplace(std::move(text), std::move(h));
            }
        }
        level.clear();
        for (auto& [text, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

long CensusReport::class2_count() const
{
    return static_cast<long>(std::count_if(entries.begin(), entries.end(), [](const CensusEntry& e) {
        return !e.class1;
    }));
}

nlohmann::json CensusReport::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const CensusEntry& e : entries)
        rows.push_back({{"n", e.n}, {"graph", e.graph}, {"class", e.class1 ? 1 : 2}, {"has_2r_pm", e.has_2r_pm}});
    return {{"r", options.r},
            {"min_n", options.min_n},
            {"max_n", options.max_n},
            {"max_mu", options.max_mu},
            {"generated", generated},
            {"r_graphs", entries.size()},
            {"class2", class2_count()},
            {"entries", rows}};
}

CensusReport run_census(const CensusOptions& options)
{
    if (options.r < 1 || options.max_n < 1 || options.max_mu < 1 || options.jobs < 1)
        throw InvalidArgument("census: r, max_n, max_mu and jobs must be positive");
    CensusReport report;
    report.options = options;
    std::vector<Multigraph> pool;
    for (int n = std::max(1, options.min_n); n <= options.max_n; ++n) {
        auto graphs = regular_multigraphs(n, options.r, options.max_mu);
        report.generated += static_cast<long>(graphs.size());
        for (Multigraph& g : graphs)
            if (verify_r_graph(g, options.r).is_r_graph)
                pool.push_back(std::move(g));
    }

    report.entries.resize(pool.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i = cursor++; i < pool.size(); i = cursor++) {
            try {
                const Multigraph& g = pool[i];
                CensusEntry& e = report.entries[i];
                e.n = g.vertex_count();
                e.graph = format_graph(g);
                e.class1 = edge_color(g, options.r).has_value();
                e.has_2r_pm = find_tr_pm(g, 2, options.r).has_value();
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (int k = 1; k < options.jobs; ++k)
        threads.emplace_back(work);
    work();
    for (std::thread& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return report;
}

} // namespace rgraph
