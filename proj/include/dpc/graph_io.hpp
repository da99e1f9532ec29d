#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpc/multigraph.hpp"

namespace dpc {

// graph6 / sparse6, bit-exact per the published format definitions.
// graph6 handles simple graphs only; sparse6 carries multiplicities
// (repeated edges). Loops and multiplicities above kMaxMultiplicity are
// rejected at parse time.

struct GraphParseError : std::runtime_error {
  explicit GraphParseError(const std::string& what) : std::runtime_error(what) {}
};

std::string emit_graph6(const MultiGraph& g);
std::string emit_sparse6(const MultiGraph& g);

// Accepts a graph6 or sparse6 line (optional ">>graph6<<" / ">>sparse6<<"
// header prefix, ':' selects sparse6).
MultiGraph parse_graph_line(const std::string& line);
MultiGraph parse_graph6(const std::string& s);
MultiGraph parse_sparse6(const std::string& s);

// Newline-delimited streams; blank lines and comment lines (starting '>')
// are skipped unless they are format headers glued to a graph.
std::vector<MultiGraph> read_graph_stream(std::istream& in);

// Reads a file of graph lines; transparently inflates gzip input.
std::vector<MultiGraph> read_graph_file(const std::string& path);

}  // namespace dpc
