#include "rgraph/certificate.hpp"

#include "rgraph/canonical.hpp"
#include "rgraph/errors.hpp"
#include "rgraph/graph_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>

namespace rgraph {

namespace {

const char* reason_name(VerdictReason r)
{
    switch (r) {
    case VerdictReason::Holds:
        return "holds";
    case VerdictReason::NotRegular:
        return "not-regular";
    case VerdictReason::OddOrder:
        return "odd-order";
    case VerdictReason::SmallOddCut:
        return "small-odd-cut";
    }
    return "?";
}

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& text, const std::array<Enum, N>& values)
{
    for (Enum v : values)
        if (text == to_string(v))
            return v;
    throw ParseError("unknown tag '" + text + "'");
}

constexpr std::array<StepKind, 7> all_steps{StepKind::TightCutSplit, StepKind::TwoCutC4Direct,
                                            StepKind::ThreeCutSplit, StepKind::PlanarOracle,
                                            StepKind::V8Coloring,    StepKind::K33Coloring,
                                            StepKind::CrossingSwap};
constexpr std::array<ReductionMode, 3> all_modes{ReductionMode::K5Free, ReductionMode::K33Free,
                                                 ReductionMode::CrossingOne};
constexpr std::array<PieceKind, 4> all_pieces{PieceKind::Planar, PieceKind::WagnerV8, PieceKind::K5,
                                              PieceKind::Split};
constexpr std::array<CrossingVerdict, 3> all_verdicts{CrossingVerdict::Planar, CrossingVerdict::OneCrossing,
                                                      CrossingVerdict::More};
constexpr std::array<Forbidden, 2> all_forbidden{Forbidden::K5, Forbidden::K33};

Certificate make(const Multigraph& g, std::string kind, Json payload)
{
    Certificate c;
    c.kind = std::move(kind);
    c.graph_hash = graph_hash(g);
    c.payload = std::move(payload);
    return c;
}

bool proper_coloring(const Multigraph& g, const Json& p, std::vector<std::string>& why)
{
    int k = p.at("k").get<int>();
    auto colors = p.at("colors").get<std::vector<int>>();
    if (static_cast<int>(colors.size()) != g.edge_count()) {
        why.push_back("coloring has the wrong number of entries");
        return false;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> seen;
        for (EdgeId e : g.incident(v)) {
            int c = colors[static_cast<std::size_t>(e)];
            if (c < 0 || c >= k) {
                why.push_back("edge " + std::to_string(e) + " has color out of range");
                return false;
            }
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
                why.push_back("two edges at vertex " + std::to_string(v) + " share color " + std::to_string(c));
                return false;
            }
            seen.push_back(c);
        }
    }
    return true;
}

void check_verdict(const Multigraph& g, const Json& p, std::vector<std::string>& why)
{
    int r = p.at("r").get<int>();
    bool claimed = p.at("is_r_graph").get<bool>();
    RGraphVerdict fresh = verify_r_graph(g, r);
    if (fresh.is_r_graph != claimed) {
        why.push_back("r-graph verdict does not match a fresh check");
        return;
    }
    if (claimed)
        return;
    if (!p.contains("witness") || p.at("witness").is_null()) {
        why.push_back("negative verdict without a witness");
        return;
    }
    std::string reason = p.at("reason").get<std::string>();
    auto side = p.at("witness").at("side").get<VertexSet>();
    if (reason == "odd-order") {
        if (g.vertex_count() % 2 == 0)
            why.push_back("odd-order witness on an even graph");
        return;
    }
    if (side.empty() || static_cast<int>(side.size()) >= g.vertex_count()) {
        why.push_back("witness side is empty or everything");
        return;
    }
    EdgeCut cut = boundary(g, side);
    auto recorded = p.at("witness").at("boundary").get<std::vector<EdgeId>>();
    if (recorded != cut.boundary)
        why.push_back("witness boundary differs from the recomputed boundary");
    if (reason == "not-regular") {
        if (side.size() != 1 || static_cast<int>(cut.boundary.size()) == r)
            why.push_back("degree witness does not show a degree other than r");
    } else if (reason == "small-odd-cut") {
        if (side.size() % 2 == 0 || static_cast<int>(cut.boundary.size()) >= r)
            why.push_back("cut witness is not an odd set with fewer than r boundary edges");
    } else {
        why.push_back("unknown verdict reason");
    }
}

} // namespace

std::string graph_hash(const Multigraph& g)
{
    std::string text = format_graph(canonical_relabel(g));
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, text.data(), text.size()) != 1 || EVP_DigestFinal_ex(ctx, digest.data(), &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw InternalDefect("sha256 digest failed");
    }
    EVP_MD_CTX_free(ctx);
    std::string hex = "sha256:";
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

Json Certificate::to_json() const
{
    return Json{{"schema", certificate_schema}, {"kind", kind}, {"graph_hash", graph_hash}, {"payload", payload}};
}

Certificate Certificate::from_json(const Json& j)
{
    if (!j.is_object() || j.value("schema", 0) != certificate_schema)
        throw ParseError("certificate lacks schema 1");
    Certificate c;
    c.kind = j.at("kind").get<std::string>();
    c.graph_hash = j.at("graph_hash").get<std::string>();
    c.payload = j.at("payload");
    return c;
}

Json cover_to_json(const PMCover& cover)
{
    Json ms = Json::array();
    for (const Matching& m : cover.matchings)
        ms.push_back(m.edge_ids);
    return Json{{"t", cover.t}, {"r", cover.r}, {"matchings", ms}};
}

PMCover cover_from_json(const Json& j)
{
    PMCover cover;
    cover.t = j.at("t").get<int>();
    cover.r = j.at("r").get<int>();
    for (const Json& m : j.at("matchings")) {
        Matching match;
        match.edge_ids = m.get<std::vector<EdgeId>>();
        cover.matchings.push_back(std::move(match));
    }
    return cover;
}

Certificate make_verdict_certificate(const Multigraph& g, const RGraphVerdict& verdict)
{
    Json p{{"r", verdict.r}, {"is_r_graph", verdict.is_r_graph}, {"reason", reason_name(verdict.reason)}};
    if (verdict.witness)
        p["witness"] = Json{{"side", verdict.witness->side}, {"boundary", verdict.witness->boundary}};
    else
        p["witness"] = nullptr;
    return make(g, "r-graph-verdict", std::move(p));
}

Certificate make_coloring_certificate(const Multigraph& g, const EdgeColoring& coloring)
{
    return make(g, "edge-coloring", Json{{"k", coloring.k}, {"colors", coloring.colors}});
}

Certificate make_cover_certificate(const Multigraph& g, const PMCover& cover)
{
    return make(g, "tr-pm", cover_to_json(cover));
}

Json tree_to_json(const CliqueSumTree& tree)
{
    Json nodes = Json::array();
    for (const CliqueSumNode& n : tree.nodes) {
        Json edges = Json::array();
        for (auto [a, b] : n.virtual_edges)
            edges.push_back({a, b});
        nodes.push_back(Json{{"kind", to_string(n.kind)},
                             {"piece", format_graph(n.piece)},
                             {"to_root", n.to_root},
                             {"separator", n.separator},
                             {"virtual_edges", edges},
                             {"children", n.children}});
    }
    return Json{{"mode", to_string(tree.mode)},
                {"vertex_count", tree.vertex_count},
                {"root", tree.root},
                {"nodes", nodes}};
}

CliqueSumTree tree_from_json(const Json& j)
{
    CliqueSumTree tree;
    tree.mode = parse_enum(j.at("mode").get<std::string>(), all_forbidden);
    tree.vertex_count = j.at("vertex_count").get<int>();
    tree.root = j.at("root").get<int>();
    for (const Json& n : j.at("nodes")) {
        CliqueSumNode node;
        node.kind = parse_enum(n.at("kind").get<std::string>(), all_pieces);
        node.piece = parse_graph(n.at("piece").get<std::string>());
        node.to_root = n.at("to_root").get<std::vector<Vertex>>();
        node.separator = n.at("separator").get<VertexSet>();
        for (const Json& e : n.at("virtual_edges"))
            node.virtual_edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        node.children = n.at("children").get<std::vector<int>>();
        for (int c : node.children)
            if (c < 0 || c >= static_cast<int>(j.at("nodes").size()))
                throw ParseError("tree child index out of range");
        tree.nodes.push_back(std::move(node));
    }
    return tree;
}

Certificate make_tree_certificate(const Multigraph& g, const CliqueSumTree& tree)
{
    return make(g, "clique-sum-tree", tree_to_json(tree));
}

Certificate make_crossing_certificate(const Multigraph& g, const CrossingCertificate& cert)
{
    Json p{{"verdict", to_string(cert.verdict)}};
    if (cert.crossing_pair) {
        p["crossing_pair"] = {cert.crossing_pair->first, cert.crossing_pair->second};
        p["x"] = cert.x;
        p["y"] = cert.y;
        p["u"] = cert.u;
        p["v"] = cert.v;
    } else {
        p["crossing_pair"] = nullptr;
    }
    return make(g, "crossing", std::move(p));
}

Json trace_to_json(const ReductionTrace& trace)
{
    Json nodes = Json::array();
    for (const TraceNode& n : trace.nodes) {
        Json j{{"kind", to_string(n.kind)},
               {"graph", format_graph(n.graph)},
               {"cover", cover_to_json(n.cover)},
               {"children", n.children}};
        if (n.cut)
            j["cut_side"] = n.cut->side;
        if (n.three_cut) {
            Json sides = Json::array();
            for (const ThreeCutSide& s : n.three_cut->sides)
                sides.push_back(Json{{"component", s.component},
                                     {"a", s.a},
                                     {"b", s.b},
                                     {"c", s.c},
                                     {"d", s.d},
                                     {"h", s.h},
                                     {"k", s.k}});
            j["three_cut"] = Json{{"separator", n.three_cut->separator},
                                  {"odd_component", n.three_cut->odd_component},
                                  {"sides", sides}};
        }
        if (n.crossing) {
            const CrossingSwapData& s = *n.crossing;
            j["crossing"] = Json{{"x", s.x},
                                 {"y", s.y},
                                 {"u", s.u},
                                 {"v", s.v},
                                 {"e_xy", s.e_xy},
                                 {"e_uv", s.e_uv},
                                 {"f", s.f},
                                 {"f_prime", s.f_prime},
                                 {"potential", s.potential},
                                 {"child_potential", s.child_potential},
                                 {"l", s.l},
                                 {"l_prime", s.l_prime},
                                 {"chain_ends", s.chain_ends}};
        }
        nodes.push_back(std::move(j));
    }
    return Json{{"mode", to_string(trace.mode)},
                {"t", trace.t},
                {"r", trace.r},
                {"root", trace.root},
                {"nodes", nodes}};
}

ReductionTrace trace_from_json(const Json& j)
{
    ReductionTrace trace;
    trace.mode = parse_enum(j.at("mode").get<std::string>(), all_modes);
    trace.t = j.at("t").get<int>();
    trace.r = j.at("r").get<int>();
    trace.root = j.at("root").get<int>();
    const Json& nodes = j.at("nodes");
    for (const Json& n : nodes) {
        TraceNode node;
        node.kind = parse_enum(n.at("kind").get<std::string>(), all_steps);
        node.graph = parse_graph(n.at("graph").get<std::string>());
        node.cover = cover_from_json(n.at("cover"));
        node.children = n.at("children").get<std::vector<int>>();
        for (int c : node.children)
            if (c < 0 || c >= static_cast<int>(nodes.size()))
                throw ParseError("trace child index out of range");
        if (n.contains("cut_side"))
            node.cut = boundary(node.graph, n.at("cut_side").get<VertexSet>(), trace.r);
        if (n.contains("three_cut")) {
            const Json& tc = n.at("three_cut");
            ThreeCutSplitData data;
            data.separator = tc.at("separator").get<VertexSet>();
            data.odd_component = tc.at("odd_component").get<VertexSet>();
            for (std::size_t i = 0; i < 2; ++i) {
                const Json& s = tc.at("sides").at(i);
                data.sides[i] =
                    build_three_cut_side(node.graph, data.separator, s.at("component").get<VertexSet>(), trace.r);
                const ThreeCutSide& b = data.sides[i];
                if (s.at("a") != b.a || s.at("b") != b.b || s.at("c") != b.c || s.at("d") != b.d ||
                    s.at("h") != b.h || s.at("k") != b.k)
                    throw ParseError("recorded 3-cut counts differ from the graph");
            }
            node.three_cut = std::move(data);
        }
        if (n.contains("crossing")) {
            const Json& c = n.at("crossing");
            CrossingSwapData s = build_crossing_swap(node.graph, c.at("x").get<Vertex>(), c.at("y").get<Vertex>(),
                                                     c.at("u").get<Vertex>(), c.at("v").get<Vertex>());
            s.child_potential = crossing_potential(s.swapped);
            if (c.at("e_xy") != s.e_xy || c.at("e_uv") != s.e_uv || c.at("f") != s.f ||
                c.at("f_prime") != s.f_prime || c.at("potential") != s.potential ||
                c.at("child_potential") != s.child_potential)
                throw ParseError("recorded crossing swap differs from the graph");
            s.l = c.at("l").get<int>();
            s.l_prime = c.at("l_prime").get<int>();
            s.chain_ends = c.at("chain_ends").get<std::string>();
            node.crossing = std::move(s);
        }
        trace.nodes.push_back(std::move(node));
    }
    if (trace.root < 0 || trace.root >= static_cast<int>(trace.nodes.size()))
        throw ParseError("trace root out of range");
    return trace;
}

Certificate make_trace_certificate(const Multigraph& g, const ReductionTrace& trace)
{
    return make(g, "reduction-trace", trace_to_json(trace));
}

CertificateCheck check_certificate(const Multigraph& g, const Certificate& cert)
{
    CertificateCheck out;
    auto& why = out.reasons;
    try {
        if (cert.graph_hash != graph_hash(g))
            why.push_back("graph_hash does not match the graph");
        const Json& p = cert.payload;
        if (cert.kind == "r-graph-verdict") {
            check_verdict(g, p, why);
        } else if (cert.kind == "edge-coloring") {
            proper_coloring(g, p, why);
        } else if (cert.kind == "tr-pm") {
            CoverCheck c = validate_tr_pm(g, cover_from_json(p));
            why.insert(why.end(), c.reasons.begin(), c.reasons.end());
        } else if (cert.kind == "clique-sum-tree") {
            std::string reason;
            if (!verify_clique_sum_tree(g, tree_from_json(p), &reason))
                why.push_back(reason);
        } else if (cert.kind == "crossing") {
            CrossingCertificate c;
            c.verdict = parse_enum(p.at("verdict").get<std::string>(), all_verdicts);
            if (!p.at("crossing_pair").is_null()) {
                c.crossing_pair = std::pair{p.at("crossing_pair").at(0).get<EdgeId>(),
                                            p.at("crossing_pair").at(1).get<EdgeId>()};
                c.x = p.at("x").get<Vertex>();
                c.y = p.at("y").get<Vertex>();
                c.u = p.at("u").get<Vertex>();
                c.v = p.at("v").get<Vertex>();
            }
            if (!verify_crossing_certificate(g, c))
                why.push_back("crossing certificate does not re-verify");
        } else if (cert.kind == "reduction-trace") {
            ReductionTrace trace = trace_from_json(p);
            const TraceNode& root = trace.nodes.at(static_cast<std::size_t>(trace.root));
            if (!(root.graph == g))
                why.push_back("trace root graph differs from the graph");
            CoverCheck c = validate_tr_pm(g, root.cover);
            why.insert(why.end(), c.reasons.begin(), c.reasons.end());
            std::string reason;
            if (!trace.check(&reason))
                why.push_back(reason);
        } else {
            why.push_back("unknown certificate kind '" + cert.kind + "'");
        }
    } catch (const std::exception& e) {
        why.push_back(std::string("malformed certificate: ") + e.what());
    }
    out.ok = why.empty();
    return out;
}

CertificateCheck check_certificates(const Multigraph& g, const Json& doc)
{
    CertificateCheck out;
    std::vector<Json> items;
    if (doc.is_array())
        items.assign(doc.begin(), doc.end());
    else
        items.push_back(doc);
    if (items.empty())
        out.reasons.push_back("no certificates");
    for (const Json& item : items) {
        CertificateCheck one;
        try {
            one = check_certificate(g, Certificate::from_json(item));
        } catch (const std::exception& e) {
            one.reasons.push_back(std::string("malformed certificate: ") + e.what());
        }
        out.reasons.insert(out.reasons.end(), one.reasons.begin(), one.reasons.end());
    }
    out.ok = out.reasons.empty();
    return out;
}

} // namespace rgraph
