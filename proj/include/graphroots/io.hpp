#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "graphroots/graph.hpp"

namespace graphroots {

// Edge-list text format:
//
//   n m
//   u v      (m lines, 0 <= u < v < n)
//
// Lines whose first non-blank character is '#' and blank lines are skipped.
// Duplicate edges, self-loops, u >= v, out-of-range ids, trailing tokens and a
// wrong edge count are ParseErrors carrying the offending line and column.

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Canonical form: header, then sorted `u v` lines with u < v.
std::string to_edge_list(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);

/// Weight file: one `v w` pair per line, '#' comments allowed. Vertices not
/// mentioned get weight 1. Weights must be finite and nonnegative.
std::vector<double> parse_weights(std::string_view text, int n);

}  // namespace graphroots
