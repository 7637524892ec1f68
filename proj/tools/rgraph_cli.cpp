#include "rgraph/census.hpp"
#include "rgraph/certificate.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/fixtures.hpp"
#include "rgraph/graph_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace rgraph;

namespace {

enum Exit {
    ok = 0,
    negative = 1,
    usage = 2,
    budget = 3,
    defect = 4,
    oracle_gap = 5,
};

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

int degree_or(const Multigraph& g, int r)
{
    if (r > 0)
        return r;
    if (auto d = g.regular_degree())
        return *d;
    throw InvalidArgument("graph is not regular; pass --r");
}

SearchBudget budget_of(std::uint64_t nodes)
{
    SearchBudget b;
    if (nodes > 0)
        b.max_nodes = nodes;
    return b;
}

Forbidden forbidden_of(const std::string& text)
{
    if (text == "K5" || text == "k5")
        return Forbidden::K5;
    if (text == "K33" || text == "k33")
        return Forbidden::K33;
    throw InvalidArgument("--forbidden must be K5 or K33");
}

ReductionMode mode_of(const std::string& text)
{
    for (ReductionMode m : {ReductionMode::K5Free, ReductionMode::K33Free, ReductionMode::CrossingOne})
        if (text == to_string(m))
            return m;
    throw InvalidArgument("--mode must be k5free, k33free or cr1");
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"r-graph analysis, perfect matching covers and certified reductions"};
    app.require_subcommand(1);

    std::string graph_file, cert_file, mode = "k5free", forbidden = "K5", dot_file, fixture_name, write_dir;
    int r = 0, t = 1, k = 0;
    std::uint64_t budget_nodes = 0;
    bool list = false;
    CensusOptions census;
    bool simple = false;

    auto* verify = app.add_subcommand("verify", "Test the r-graph property; prints a verdict certificate");
    verify->add_option("graph", graph_file, "graph file")->required();
    verify->add_option("--r", r, "degree (default: the graph's regular degree)");

    auto* cover = app.add_subcommand("cover", "Search for a (t,r)-perfect-matching cover");
    cover->add_option("graph", graph_file, "graph file")->required();
    cover->add_option("--t", t, "multiplicity t")->check(CLI::PositiveNumber);
    cover->add_option("--r", r, "degree r");
    cover->add_option("--budget", budget_nodes, "search node budget");

    auto* color = app.add_subcommand("color", "Search for a proper k-edge-coloring");
    color->add_option("graph", graph_file, "graph file")->required();
    color->add_option("--k", k, "number of colors (default: r)");
    color->add_option("--budget", budget_nodes, "search node budget");

    auto* reduce_cmd = app.add_subcommand("reduce", "Build a cover by reduction to planar pieces");
    reduce_cmd->add_option("graph", graph_file, "graph file")->required();
    reduce_cmd->add_option("--t", t, "multiplicity t")->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--r", r, "degree r");
    reduce_cmd->add_option("--mode", mode, "k5free | k33free | cr1");
    reduce_cmd->add_option("--dot", dot_file, "write the reduction trace as DOT");

    auto* check = app.add_subcommand("check", "Re-verify certificates against a graph");
    check->add_option("graph", graph_file, "graph file")->required();
    check->add_option("certificate", cert_file, "certificate JSON (object or array)")->required();

    auto* decompose = app.add_subcommand("decompose", "Clique-sum decomposition of a minor-free graph");
    decompose->add_option("graph", graph_file, "graph file")->required();
    decompose->add_option("--forbidden", forbidden, "K5 | K33");

    auto* crossing = app.add_subcommand("crossing", "Decide crossing number at most one");
    crossing->add_option("graph", graph_file, "graph file")->required();

    auto* census_cmd = app.add_subcommand("census", "Tabulate small r-graphs by edge-coloring class");
    census_cmd->add_option("--r", census.r, "degree")->check(CLI::PositiveNumber);
    census_cmd->add_option("--min-n", census.min_n, "smallest order");
    census_cmd->add_option("--max-n", census.max_n, "largest order")->check(CLI::PositiveNumber);
    census_cmd->add_option("--max-mu", census.max_mu, "largest edge multiplicity")->check(CLI::PositiveNumber);
    census_cmd->add_flag("--simple", simple, "simple graphs only (same as --max-mu 1)");
    census_cmd->add_option("--jobs", census.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* fixture = app.add_subcommand("fixture", "Print or write the named fixtures");
    fixture->add_option("name", fixture_name, "fixture name");
    fixture->add_flag("--list", list, "list fixture names");
    fixture->add_option("--write-dir", write_dir, "write every fixture as <name>.g");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*verify) {
            Multigraph g = read_graph_file(graph_file);
            RGraphVerdict v = verify_r_graph(g, degree_or(g, r));
            emit(make_verdict_certificate(g, v).to_json());
            return v.is_r_graph ? ok : negative;
        }
        if (*cover) {
            Multigraph g = read_graph_file(graph_file);
            int rr = degree_or(g, r);
            auto found = find_tr_pm(g, t, rr, budget_of(budget_nodes));
            if (!found) {
                std::cerr << "no (" << t << "," << rr << ")-PM exists\n";
                return negative;
            }
            emit(make_cover_certificate(g, *found).to_json());
            return ok;
        }
        if (*color) {
            Multigraph g = read_graph_file(graph_file);
            int kk = k > 0 ? k : degree_or(g, 0);
            auto found = edge_color(g, kk, budget_of(budget_nodes));
            if (!found) {
                std::cerr << "no proper " << kk << "-edge-coloring exists\n";
                return negative;
            }
            emit(make_coloring_certificate(g, *found).to_json());
            return ok;
        }
        if (*reduce_cmd) {
            Multigraph g = read_graph_file(graph_file);
            ReductionResult res = reduce(g, t, degree_or(g, r), mode_of(mode));
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                out << res.trace.to_dot();
            }
            emit(Json::array({make_cover_certificate(g, res.cover).to_json(),
                              make_trace_certificate(g, res.trace).to_json()}));
            return ok;
        }
        if (*check) {
            Multigraph g = read_graph_file(graph_file);
            CertificateCheck c = check_certificates(g, read_json_file(cert_file));
            if (c.ok) {
                std::cout << "ok\n";
                return ok;
            }
            for (const std::string& reason : c.reasons)
                std::cout << "rejected: " << reason << '\n';
            return negative;
        }
        if (*decompose) {
            Multigraph g = read_graph_file(graph_file);
            CliqueSumTree tree = wagner_decompose(g, forbidden_of(forbidden));
            emit(make_tree_certificate(g, tree).to_json());
            return ok;
        }
        if (*crossing) {
            Multigraph g = read_graph_file(graph_file);
            CrossingCertificate c = crossing_at_most_one(g);
            emit(make_crossing_certificate(g, c).to_json());
            return c.verdict == CrossingVerdict::More ? negative : ok;
        }
        if (*census_cmd) {
            if (simple)
                census.max_mu = 1;
            emit(run_census(census).to_json());
            return ok;
        }
        if (*fixture) {
            if (list) {
                for (const std::string& name : fixtures::names())
                    std::cout << name << '\n';
                return ok;
            }
            if (!write_dir.empty()) {
                std::filesystem::create_directories(write_dir);
                for (const std::string& name : fixtures::names())
                    write_graph_file(std::filesystem::path(write_dir) / (name + ".g"), *fixtures::by_name(name));
                return ok;
            }
            auto g = fixtures::by_name(fixture_name);
            if (!g)
                throw InvalidArgument("unknown fixture '" + fixture_name + "'");
            std::cout << format_graph(*g);
            return ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return usage;
    } catch (const InvalidPlan& e) {
        std::cerr << "invalid plan: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionViolation& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return negative;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const OracleGap& e) {
        std::cerr << "planar oracle found no cover for:\n" << format_graph(e.instance);
        return oracle_gap;
    } catch (const InternalDefect& e) {
        std::cerr << "internal defect: " << e.what() << '\n';
        return defect;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return defect;
    }
    return usage;
}
