#include "rgraph/graph_io.hpp"

#include "rgraph/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rgraph {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int line_no)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

Multigraph parse_graph(std::string_view text)
{
    int n = -1;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#')
            continue;
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "graph")
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'graph <n>'");
            n = to_int(toks[1], line_no);
            if (n < 0)
                throw ParseError("negative vertex count");
            continue;
        }
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v' or 'u v *k'");
        Vertex u = to_int(toks[0], line_no);
        Vertex v = to_int(toks[1], line_no);
        int copies = 1;
        if (toks.size() == 3) {
            if (toks[2].size() < 2 || toks[2][0] != '*')
                throw ParseError("line " + std::to_string(line_no) + ": multiplicity must look like '*k'");
            copies = to_int(toks[2].substr(1), line_no);
            if (copies < 1)
                throw ParseError("line " + std::to_string(line_no) + ": multiplicity must be positive");
        }
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": loops are not allowed");
        for (int c = 0; c < copies; ++c)
            pairs.emplace_back(u, v);
    }
    if (n < 0)
        throw ParseError("missing 'graph <n>' header");
    return Multigraph::from_pairs(n, pairs);
}

Multigraph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const Multigraph& g)
{
    std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && edges[j] == edges[i])
            ++j;
        out += std::to_string(edges[i].u) + " " + std::to_string(edges[i].v);
        if (j - i > 1)
            out += " *" + std::to_string(j - i);
        out += "\n";
        i = j;
    }
    return out;
}

void write_graph_file(const std::filesystem::path& path, const Multigraph& g)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path.string());
    out << format_graph(g);
}

} // namespace rgraph
