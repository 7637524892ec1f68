#include "rgraph/minor_topology.hpp"

#include "rgraph/errors.hpp"

namespace rgraph {

namespace {

template <typename F>
void for_each_valid_pair(const Multigraph& s, F&& visit)
{
    for (EdgeId a = 0; a < s.edge_count(); ++a) {
        for (EdgeId b = a + 1; b < s.edge_count(); ++b) {
            const Edge& ea = s.edge(a);
            const Edge& eb = s.edge(b);
            if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
                continue;
            if (!is_planar(planarize_pair(s, a, b)))
                continue;
            CrossingCertificate cert;
            cert.verdict = CrossingVerdict::OneCrossing;
            cert.crossing_pair = std::pair{a, b};
            cert.x = ea.u;
            cert.y = ea.v;
            cert.u = eb.u;
            cert.v = eb.v;
            if (!visit(cert))
                return;
        }
    }
}

} // namespace

Multigraph planarize_pair(const Multigraph& simple, EdgeId e1, EdgeId e2)
{
    if (e1 == e2 || e1 < 0 || e2 < 0 || e1 >= simple.edge_count() || e2 >= simple.edge_count())
        throw InvalidArgument("planarize_pair needs two distinct edge ids");
    std::vector<EdgeId> drop{e1, e2};
    Multigraph rest = without_edges(simple, drop);
    int n = simple.vertex_count();
    auto pairs = rest.endpoint_pairs();
    for (EdgeId e : drop) {
        pairs.emplace_back(simple.edge(e).u, n);
        pairs.emplace_back(simple.edge(e).v, n);
    }
    return Multigraph::from_pairs(n + 1, pairs);
}

CrossingCertificate crossing_at_most_one(const Multigraph& g)
{
    CrossingCertificate cert;
    if (is_planar(g)) {
        cert.verdict = CrossingVerdict::Planar;
        return cert;
    }
    Multigraph s = underlying_simple(g);
    for_each_valid_pair(s, [&](const CrossingCertificate& c) {
        cert = c;
        return false;
    });
    return cert;
}

std::vector<CrossingCertificate> crossing_certificates(const Multigraph& g)
{
    std::vector<CrossingCertificate> out;
    if (is_planar(g))
        return out;
    Multigraph s = underlying_simple(g);
    for_each_valid_pair(s, [&](const CrossingCertificate& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool verify_crossing_certificate(const Multigraph& g, const CrossingCertificate& cert)
{
    bool planar = is_planar(g);
    switch (cert.verdict) {
    case CrossingVerdict::Planar:
        return planar && !cert.crossing_pair;
    case CrossingVerdict::More:
        return !planar && !cert.crossing_pair && crossing_certificates(g).empty();
    case CrossingVerdict::OneCrossing:
        break;
    }
    if (planar || !cert.crossing_pair)
        return false;
    Multigraph s = underlying_simple(g);
    auto [a, b] = *cert.crossing_pair;
    if (a < 0 || b < 0 || a >= s.edge_count() || b >= s.edge_count() || a == b)
        return false;
    const Edge& ea = s.edge(a);
    const Edge& eb = s.edge(b);
    if (ea.u != cert.x || ea.v != cert.y || eb.u != cert.u || eb.v != cert.v)
        return false;
    if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
        return false;
    return is_planar(planarize_pair(s, a, b));
}

} // namespace rgraph
