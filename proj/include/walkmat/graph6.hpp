#ifndef WALKMAT_GRAPH6_HPP
#define WALKMAT_GRAPH6_HPP

#include <string>
#include <vector>

#include "walkmat/graph.hpp"

namespace walkmat {

/* Short-form graph6 records (n <= 62): one size byte n+63, then the upper
   triangle read column by column (a01; a02, a12; a03, ...) packed six bits
   per byte, most significant first, zero padded, each byte offset by 63.
   Only the short form is supported; 16 vertices is the largest order the
   census ever touches. */

// Throws std::invalid_argument on any malformed record (byte out of the
// 63..126 range, long-form header, truncated or oversized payload,
// nonzero padding).
Graph parse_graph6(const std::string& line);

// Throws std::invalid_argument when g.n > 62.
std::string write_graph6(const Graph& g);

// Line-delimited graph6 file; blank lines are rejected as malformed.
// Throws std::runtime_error with the line number on parse failure, or on
// unreadable files.
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace walkmat

#endif
