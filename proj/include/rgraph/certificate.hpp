#pragma once

#include "rgraph/minor_topology.hpp"
#include "rgraph/multigraph.hpp"
#include "rgraph/pm_cover.hpp"
#include "rgraph/reduction.hpp"
#include "rgraph/rgraph_analysis.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rgraph {

using Json = nlohmann::json;

inline constexpr int certificate_schema = 1;

/// "sha256:<hex>" of the canonical relabeling in graph text format.
std::string graph_hash(const Multigraph& g);

struct Certificate {
    std::string kind;
    std::string graph_hash;
    Json payload;

    Json to_json() const;
    static Certificate from_json(const Json& j);
};

Certificate make_verdict_certificate(const Multigraph& g, const RGraphVerdict& verdict);
Certificate make_coloring_certificate(const Multigraph& g, const EdgeColoring& coloring);
Certificate make_cover_certificate(const Multigraph& g, const PMCover& cover);
Certificate make_tree_certificate(const Multigraph& g, const CliqueSumTree& tree);
Certificate make_crossing_certificate(const Multigraph& g, const CrossingCertificate& cert);
Certificate make_trace_certificate(const Multigraph& g, const ReductionTrace& trace);

Json cover_to_json(const PMCover& cover);
PMCover cover_from_json(const Json& j);
Json trace_to_json(const ReductionTrace& trace);
/// Rebuilds a trace, recomputing all derived step data from the recorded
/// choices (cut sides, separators, crossing pairs).
ReductionTrace trace_from_json(const Json& j);
Json tree_to_json(const CliqueSumTree& tree);
CliqueSumTree tree_from_json(const Json& j);

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Re-verifies one certificate against g with the independent validators.
CertificateCheck check_certificate(const Multigraph& g, const Certificate& cert);
/// Accepts one certificate object or an array of them.
CertificateCheck check_certificates(const Multigraph& g, const Json& doc);

} // namespace rgraph
