#pragma once

#include "paintkit/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace paintkit {

/// graph6 encoding with the minimal size prefix. `header` prepends ">>graph6<<".
std::string encode_graph6(const Graph& g, bool header = false);

/// Decodes one graph6 record (no newline). Throws ParseError carrying the byte
/// offset: MalformedHeader, TruncatedBitVector, NonPrintableByte, TrailingBytes
/// or NonzeroPadding.
Graph decode_graph6(std::string_view text);

/// One graph per non-empty line. Offsets in errors are relative to the whole text.
std::vector<Graph> decode_graph6_lines(std::string_view text);

/// "n m" header line followed by one "u v" line per edge; empty for the null graph.
std::string encode_edge_list(const Graph& g);

/// Lines of "u v". The first line is read as an "n m" header when n > 0, exactly m
/// edge lines follow and all ids are below n; otherwise n is max id + 1.
/// Blank lines and lines starting with '#' are ignored. Errors carry 1-based
/// line numbers: SelfLoop, DuplicateEdge, Syntax.
Graph decode_edge_list(std::string_view text);

} // namespace paintkit
