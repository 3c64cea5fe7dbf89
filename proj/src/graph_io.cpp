#include "perron/graph_io.hpp"

#include <sstream>
#include <vector>

#include "perron/errors.hpp"

namespace perron {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6Max = 126;
constexpr int kGraph6SizeLimit = 62;

std::string strip_graph6_decorations(const std::string& raw) {
  std::string line = raw;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line.erase(0, header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t'))
    line.pop_back();
  return line;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  const std::string line = strip_graph6_decorations(raw);
  if (line.empty()) throw FormatError("empty graph6 record");

  const unsigned char size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126)
    throw CapabilityError("graph6 long-form size header (n > 62) is not supported");
  if (size_byte < kGraph6Bias || size_byte > kGraph6Max)
    throw FormatError("graph6 byte " + std::to_string(int{size_byte}) +
                      " outside printable range 63..126");
  const int n = size_byte - kGraph6Bias;
  if (n < 1) throw FormatError("graph6 record encodes n = 0; graphs need at least one vertex");

  const int bits = n * (n - 1) / 2;
  const std::size_t payload_len = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - 1 != payload_len)
    throw FormatError("graph6 payload for n=" + std::to_string(n) + " must be " +
                      std::to_string(payload_len) + " bytes, got " +
                      std::to_string(line.size() - 1));

  Graph g(n);
  int k = 0;  // bit cursor over the upper triangle, column-major
  int i = 0;
  int j = 1;
  for (std::size_t t = 0; t < payload_len; ++t) {
    const unsigned char c = static_cast<unsigned char>(line[1 + t]);
    if (c < kGraph6Bias || c > kGraph6Max)
      throw FormatError("graph6 byte " + std::to_string(int{c}) +
                        " outside printable range 63..126");
    const int group = c - kGraph6Bias;
    for (int b = 5; b >= 0 && k < bits; --b, ++k) {
      if (group >> b & 1) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6SizeLimit)
    throw CapabilityError("graph6 encoding limited to n <= 62, got n=" + std::to_string(n));

  std::string out;
  out.push_back(static_cast<char>(n + kGraph6Bias));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kGraph6Bias));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kGraph6Bias));
  return out;
}

ParsedEdgeList parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long line_no = 0;

  auto significant = [](const std::string& s) {
    const auto pos = s.find_first_not_of(" \t\r");
    return pos != std::string::npos && s[pos] != '#';
  };

  long n = -1;
  long m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    std::istringstream fields(line);
    if (!(fields >> n >> m) || n < 1 || m < 0)
      throw FormatError("expected header 'n m' with n >= 1 and m >= 0", line_no);
    std::string extra;
    if (fields >> extra) throw FormatError("unexpected token '" + extra + "' after header", line_no);
    break;
  }
  if (n < 0) throw FormatError("missing 'n m' header line");

  ParsedEdgeList result{Graph(static_cast<int>(n)), 0};
  long edges_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    if (edges_read == m)
      throw FormatError("unexpected extra line after " + std::to_string(m) + " edges", line_no);
    std::istringstream fields(line);
    long u = 0;
    long v = 0;
    if (!(fields >> u >> v)) throw FormatError("expected edge line 'u v'", line_no);
    std::string extra;
    if (fields >> extra)
      throw FormatError("unexpected token '" + extra + "' after edge", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw FormatError("endpoint out of range [0, " + std::to_string(n) + ")", line_no);
    if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u), line_no);
    if (result.graph.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      ++result.duplicate_edges;
    else
      result.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++edges_read;
  }
  if (edges_read != m)
    throw FormatError("header announced " + std::to_string(m) + " edges but input has " +
                      std::to_string(edges_read));
  return result;
}

std::vector<Graph> parse_graph_text(const GraphText& text) {
  std::vector<Graph> graphs;
  if (text.format == GraphTextFormat::EdgeList) {
    graphs.push_back(parse_edge_list(text.payload).graph);
    return graphs;
  }
  std::istringstream in(text.payload);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError(std::string(e.what()), line_no);
    }
  }
  if (graphs.empty()) throw FormatError("no graph6 record in input");
  return graphs;
}

}  // namespace perron
