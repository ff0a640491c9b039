#pragma once

#include <string>
#include <string_view>

#include "bturan/bipartite_graph.hpp"
#include "bturan/general_graph.hpp"

namespace bturan {

/// BGF text: header "a b", then one "i j" line per edge sorted by (i, j),
/// every line newline-terminated, no comments.
std::string serialize_bgf(const BipartiteGraph& g);

/// Accepts edges in any order. Throws ParseError (1-based line) on a
/// malformed header or edge line, an out-of-range endpoint, or a duplicate edge.
BipartiteGraph parse_bgf(std::string_view text);

/// Single-part variant: header "n", then "u v" lines with u < v after
/// normalisation (either order accepted on input; output sorted with u < v).
std::string serialize_graph(const GeneralGraph& g);
GeneralGraph parse_graph(std::string_view text);

}  // namespace bturan
