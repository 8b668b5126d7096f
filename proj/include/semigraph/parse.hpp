#pragma once

#include <string>
#include <string_view>

#include "semigraph/semigraph.hpp"

namespace semigraph {

// Line-oriented text format:
//   # comment lines are ignored
//   v <label> ...   optional vertex declarations fixing vertex order
//   e <label> ...   one edge per line, >= 2 labels, order significant
// Labels are whitespace-free tokens not starting with '#'. Vertices not
// declared on a 'v' line are added in order of first appearance.
// Throws ParseError with 1-based line/column positions.
Semigraph parse_semigraph(std::string_view text);

// Inverse of parse_semigraph: a 'v' line freezing the vertex order followed
// by one 'e' line per edge in stored (canonical) orientation. Parsing the
// result reproduces the semigraph exactly.
std::string emit_semigraph(const Semigraph& g);

}  // namespace semigraph
