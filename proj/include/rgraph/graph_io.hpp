#pragma once

#include "rgraph/multigraph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace rgraph {

// Text format:
//
//   # comment
//   graph <n>
//   u v          one edge
//   u v *k       k parallel copies
//
// Vertices are 0-indexed; repeated lines add further parallel copies. The
// writer emits one line per parallel class in canonical id order, so
// write(read(write(g))) == write(g) byte for byte.

Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Multigraph& g);
void write_graph_file(const std::filesystem::path& path, const Multigraph& g);

} // namespace rgraph
