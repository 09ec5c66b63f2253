#pragma once

#include "bchroma/colouring.hpp"
#include "bchroma/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string_view>

namespace bchroma {

enum class GraphFormat {
    EdgeList,  ///< "<n> <m>" then m lines "<u> <v>"
    Dimacs,    ///< "c ..." comments, "p edge <n> <m>", "e <u> <v>"
};

/// Malformed input. Carries the 1-based line number where parsing failed
/// (0 when the problem is not tied to a line, e.g. a missing header).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, int line);
    int line() const { return line_; }

private:
    int line_;
};

/// Accepts LF or CRLF line endings. The declared edge count must match the
/// number of edge lines. Disconnected graphs are returned as-is.
Graph read_graph(std::istream &in, GraphFormat format);
void write_graph(std::ostream &out, const Graph &g, GraphFormat format);

/// Colouring file: "k" on the first line, then one "vertex colour" line per
/// vertex. Every vertex 1..n must appear exactly once.
Colouring read_colouring(std::istream &in, int n);
void write_colouring(std::ostream &out, const Colouring &c);

GraphFormat parse_graph_format(std::string_view name);

}  // namespace bchroma
