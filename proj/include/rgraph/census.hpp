#pragma once

#include "rgraph/multigraph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rgraph {

/// All connected loopless r-regular multigraphs on n vertices with edge
/// multiplicity at most max_mu, one per isomorphism class, each in canonical
/// labeling and sorted by their text form.
std::vector<Multigraph> regular_multigraphs(int n, int r, int max_mu);

/// All simple graphs on n vertices (connected or not), one per isomorphism
/// class, in canonical labeling and sorted by their text form.
std::vector<Multigraph> simple_graphs(int n);

struct CensusOptions {
    int r = 3;
    int min_n = 2;
    int max_n = 8;
    int max_mu = 3;
    int jobs = 1;
};

struct CensusEntry {
    int n = 0;
    std::string graph;
    bool class1 = false;
    bool has_2r_pm = false;
};

struct CensusReport {
    CensusOptions options;
    long generated = 0;
    std::vector<CensusEntry> entries;

    long class2_count() const;
    nlohmann::json to_json() const;
};

/// Enumerates connected r-regular multigraphs, keeps the r-graphs and records
/// whether each is r-edge-colorable and has a (2,r)-PM.
CensusReport run_census(const CensusOptions& options);

} // namespace rgraph
