#pragma once

#include "rgraph/multigraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgraph::fixtures {

Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph cycle(int n);
/// Cycle 0-1-2-3-0 with the given multiplicities on 01, 12, 23, 30.
Multigraph c4(int m01, int m12, int m23, int m30);
Multigraph petersen();
/// Outer 5-cycle of petersen() is vertices 0..4.
VertexSet petersen_outer_cycle();
/// Wagner graph V8: 8-cycle plus the four long diagonals.
Multigraph wagner_v8();
/// Möbius ladder on n (even) vertices; V8 is the case n = 8.
Multigraph mobius_ladder(int n);
Multigraph prism();
Multigraph prism(int k);
Multigraph cube();
Multigraph octahedron();
Multigraph dodecahedron();
/// Two K4's, each with one edge subdivided, joined by a bridge between the
/// subdivision vertices (cubic, 10 vertices).
Multigraph bridged_cubic();
/// Multiplies every edge by k.
Multigraph scaled(const Multigraph& g, int k);
/// Adds one extra copy of each edge in `matching`.
Multigraph with_doubled(const Multigraph& g, const std::vector<EdgeId>& matching);
/// Replaces vertex v (degree d) by a d-cycle, each cycle vertex taking one of
/// v's former edges. For a cubic graph this inflates v into a triangle.
Multigraph inflate_vertex(const Multigraph& g, Vertex v);

/// A 3-connected, non-planar, K5-minor-free 7-graph on 10 vertices whose
/// separator {0,1,2} leaves one odd and two even components.
Multigraph three_cut_composite();

/// Named fixtures shipped with the CLI (petersen, wagner-v8, k33, ...).
std::vector<std::string> names();
std::optional<Multigraph> by_name(const std::string& name);

} // namespace rgraph::fixtures
