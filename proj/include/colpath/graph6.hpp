#pragma once

#include <string>
#include <string_view>

#include "colpath/graph.hpp"

namespace colpath {

// Decodes one graph6 record.  An optional ">>graph6<<" header and trailing
// newline are accepted and stripped; everything else must be the size bytes
// N(n) followed by the packed upper-triangle body.  Throws
// MalformedGraph6Error on bad length or bytes outside 63..126, and
// GraphTooLargeError when the encoded n exceeds the vertex cap.
Graph parse_graph6(std::string_view text);

// Encodes a graph as a canonical graph6 record: no header, no newline,
// short size byte for n <= 62 and the 3-byte extended form above that.
std::string encode_graph6(const Graph& g);

}  // namespace colpath
