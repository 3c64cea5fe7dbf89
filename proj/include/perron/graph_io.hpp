#pragma once

#include <string>
#include <vector>

#include "perron/graph.hpp"

namespace perron {

/// Decodes one graph6 record (printable bytes 63..126, single-byte size
/// header, n <= 62). Leading ">>graph6<<" markers and trailing line endings
/// are tolerated. Payload bits are the upper triangle in column-major order.
Graph parse_graph6(const std::string& line);

/// Canonical graph6 line for g (n <= 62). parse_graph6(encode_graph6(g)) == g.
std::string encode_graph6(const Graph& g);

struct ParsedEdgeList {
  Graph graph;
  long duplicate_edges = 0;  // collapsed duplicates, reported as a warning count
};

/// Parses the plain edge-list format: a header line "n m" followed by m lines
/// "u v" with 0-based endpoints. Blank lines and lines starting with '#' are
/// ignored. Errors carry 1-based line numbers.
ParsedEdgeList parse_edge_list(const std::string& text);

enum class GraphTextFormat { Graph6, EdgeList };

/// A chunk of graph text: a graph6 payload holds one record per line, an
/// edge-list payload a single graph.
struct GraphText {
  GraphTextFormat format = GraphTextFormat::EdgeList;
  std::string payload;
};

/// Every graph in the text, in order. Format errors from graph6 records are
/// rethrown with the catalog line number attached.
std::vector<Graph> parse_graph_text(const GraphText& text);

}  // namespace perron
