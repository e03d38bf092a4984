#pragma once

#include <string>
#include <string_view>

#include "quadlab/orthogonality.hpp"
#include "quadlab/tournament.hpp"

namespace quadlab {

// Matrix file: a decimal header line "n", then n lines of exactly n
// characters '0' / '1'; row u column v is 1 iff u -> v. The trailing newline
// is optional and no other whitespace is accepted. Pattern inputs may use a
// "rows cols" header instead.

/// Throws ParseError with a line number on malformed text.
BinaryPattern parse_pattern(std::string_view text);

/// parse_pattern plus Tournament::validate. A "rows cols" header is rejected.
Tournament parse_tournament(std::string_view text);

std::string render_matrix(const Tournament& t);
std::string render_pattern(const BinaryPattern& p);

/// Graphviz digraph, vertices 0..n-1, one edge per arc sorted by (u, v).
std::string to_dot(const Tournament& t);

}  // namespace quadlab
