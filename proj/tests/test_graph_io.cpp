#include <random>

#include <doctest.h>

#include "perron/errors.hpp"
#include "perron/graph_io.hpp"

using namespace perron;

TEST_CASE("parse_graph6 known strings") {
  CHECK(parse_graph6("A_") == graph_from_edges(2, {{0, 1}}));
  CHECK(parse_graph6("Bw") == named_graph(GraphFamily::Complete, 3));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(parse_graph6("@") == Graph(1));
  // values cross-checked against an independent reference codec
  CHECK(parse_graph6("C~") == named_graph(GraphFamily::Complete, 4));
  CHECK(parse_graph6("Ch") == named_graph(GraphFamily::Path, 4));
  CHECK(parse_graph6("Dhc") == named_graph(GraphFamily::Cycle, 5));
  CHECK(parse_graph6("Ds_") == named_graph(GraphFamily::Star, 5));
  CHECK(parse_graph6(">>graph6<<A_\n") == graph_from_edges(2, {{0, 1}}));

  const Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(is_regular(petersen) == 3);
  CHECK(is_connected(petersen));
}

TEST_CASE("encode_graph6 known strings") {
  CHECK(encode_graph6(graph_from_edges(2, {{0, 1}})) == "A_");
  CHECK(encode_graph6(Graph(2)) == "A?");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(named_graph(GraphFamily::Complete, 3)) == "Bw");
  CHECK(encode_graph6(named_graph(GraphFamily::Complete, 4)) == "C~");
  CHECK(encode_graph6(named_graph(GraphFamily::Path, 4)) == "Ch");
  CHECK(encode_graph6(named_graph(GraphFamily::Cycle, 5)) == "Dhc");
  CHECK(encode_graph6(named_graph(GraphFamily::Star, 5)) == "Ds_");
}

TEST_CASE("graph6 round-trip over all connected graphs on 5 vertices") {
  ConnectedGraphEnumerator en(5);
  int count = 0;
  while (auto g = en.next()) {
    CHECK(parse_graph6(encode_graph6(*g)) == *g);
    ++count;
  }
  CHECK(count == 728);
}

TEST_CASE("graph6 round-trip on larger random graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_connected(62, 0.15, seed);
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 format errors") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("A"), FormatError);      // missing payload
  CHECK_THROWS_AS(parse_graph6("A__"), FormatError);    // payload too long
  CHECK_THROWS_AS(parse_graph6("?"), FormatError);      // n = 0
  CHECK_THROWS_AS(parse_graph6(std::string("A") + char(0x20)), FormatError);  // byte < 63
  CHECK_THROWS_AS(parse_graph6("~??"), CapabilityError);  // long-form size header
  CHECK_THROWS_AS(encode_graph6(Graph(63)), CapabilityError);
}

TEST_CASE("parse_edge_list") {
  auto k2 = parse_edge_list("2 1\n0 1\n");
  CHECK(k2.graph == graph_from_edges(2, {{0, 1}}));
  CHECK(k2.duplicate_edges == 0);

  auto p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(p4.graph == named_graph(GraphFamily::Path, 4));

  auto commented = parse_edge_list("# path on four vertices\n4 3\n\n0 1\n# middle\n1 2\n2 3\n");
  CHECK(commented.graph == named_graph(GraphFamily::Path, 4));

  auto dup = parse_edge_list("3 3\n0 1\n1 0\n1 2\n");
  CHECK(dup.duplicate_edges == 1);
  CHECK(dup.graph.edge_count() == 2);
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  try {
    parse_edge_list("3 1\n0 3\n");
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list(""), FormatError);
  CHECK_THROWS_AS(parse_edge_list("x y\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), FormatError);      // self-loop
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);      // too few lines
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), FormatError); // extra line
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), FormatError);    // extra token
}

TEST_CASE("parse_graph_text dispatches on format") {
  const auto from_edges = parse_graph_text({GraphTextFormat::EdgeList, "2 1\n0 1\n"});
  REQUIRE(from_edges.size() == 1);
  CHECK(from_edges[0] == graph_from_edges(2, {{0, 1}}));

  const auto catalog = parse_graph_text({GraphTextFormat::Graph6, "A_\n\nBw\nC~\n"});
  REQUIRE(catalog.size() == 3);
  CHECK(catalog[1] == named_graph(GraphFamily::Complete, 3));

  CHECK_THROWS_AS(parse_graph_text({GraphTextFormat::Graph6, "\n \n"}), FormatError);
  try {
    parse_graph_text({GraphTextFormat::Graph6, "A_\nA\n"});
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line == 2);  // catalog line number attached
  }
}

TEST_CASE("edge list is order independent") {
  std::vector<std::string> lines = {"0 1", "1 2", "2 3", "3 4", "0 4", "1 3"};
  std::mt19937_64 rng(5);
  const Graph reference = parse_edge_list("5 6\n0 1\n1 2\n2 3\n3 4\n0 4\n1 3\n").graph;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text = "5 6\n";
    for (const auto& line : lines) text += line + "\n";
    CHECK(parse_edge_list(text).graph == reference);
  }
}
