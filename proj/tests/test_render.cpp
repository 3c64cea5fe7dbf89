#include <cstdio>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "perron/graph_io.hpp"
#include "perron/render.hpp"

using namespace perron;

namespace {

std::string fmt5(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.5g", value);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("text report shows 5-significant-digit columns") {
  const BoundsReport report = analyze(named_graph(GraphFamily::Path, 4));
  const std::string text = render_text(report, verify_report(report));
  CHECK(text.find("0.25097") != std::string::npos);
  CHECK(text.find("0.19971") != std::string::npos);
  CHECK(text.find("0.37175") != std::string::npos);
  CHECK(text.find("0.52573") != std::string::npos);
  CHECK(text.find("verification: PASS") != std::string::npos);
}

TEST_CASE("text report footnotes the star equality cases") {
  const BoundsReport report = analyze(named_graph(GraphFamily::Star, 10));
  const std::string text = render_text(report, verify_report(report));
  CHECK(text.find("max-entry equality: yes (star)") != std::string::npos);
  CHECK(text.find("upper-bound equality at: 0") != std::string::npos);
}

TEST_CASE("text report carries the single-vertex note") {
  const BoundsReport report = analyze(Graph(1));
  const std::string text = render_text(report, verify_report(report));
  CHECK(text.find("note:") != std::string::npos);
}

TEST_CASE("renderings agree across formats") {
  const BoundsReport report = analyze(graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}}));
  const auto violations = verify_report(report);
  const std::string text = render_text(report, violations);
  const std::string csv = render_csv(report);
  const nlohmann::json doc = nlohmann::json::parse(render_json(report, violations));

  REQUIRE(doc["rows"].size() == report.rows.size());
  std::istringstream csv_in(csv);
  std::string line;
  std::getline(csv_in, line);  // header
  const auto header = split(line, ',');
  REQUIRE(header[4] == "lower_lwm");

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    REQUIRE(std::getline(csv_in, line));
    const auto fields = split(line, ',');
    const auto& item = doc["rows"][i];
    // csv and json agree to full precision
    CHECK(std::stod(fields[3]) == item["rho_deleted"].get<double>());
    CHECK(std::stod(fields[4]) == item["lower_lwm"].get<double>());
    CHECK(std::stod(fields[5]) == item["lower_new"].get<double>());
    CHECK(std::stod(fields[6]) == item["actual"].get<double>());
    CHECK(std::stod(fields[7]) == item["upper_cg"].get<double>());
    CHECK(std::stod(fields[8]) == item["exact_sq"].get<double>());
    CHECK(fields[9] == item["winner"].get<std::string>());
    // text shows the same values rounded to 5 significant digits
    CHECK(text.find(fmt5(item["lower_lwm"].get<double>())) != std::string::npos);
    CHECK(text.find(fmt5(item["lower_new"].get<double>())) != std::string::npos);
    CHECK(text.find(fmt5(item["actual"].get<double>())) != std::string::npos);
    CHECK(text.find(fmt5(item["upper_cg"].get<double>())) != std::string::npos);
  }

  CHECK(doc["violations"].empty());
  CHECK(doc["graph"]["graph6"].get<std::string>() == encode_graph6(report.graph));
}

TEST_CASE("labels flow through the renderings") {
  Graph g = named_graph(GraphFamily::Path, 3);
  g.set_labels({"a", "b", "c"});
  const BoundsReport report = analyze(g);
  const std::string text = render_text(report, {});
  CHECK(text.find("a") != std::string::npos);
  const nlohmann::json doc = nlohmann::json::parse(render_json(report, {}));
  CHECK(doc["rows"][1]["label"] == "b");
}
