#include "perron/render.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "perron/graph_io.hpp"

namespace perron {

namespace {

std::string fmt(double value, const char* spec) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

std::string fmt5(double value) { return fmt(value, "%.5g"); }
std::string fmt_full(double value) { return fmt(value, "%.17g"); }

std::string vertex_name(const BoundsReport& report, Vertex v) {
  if (report.graph.has_labels()) return report.graph.labels()[v];
  return std::to_string(v);
}

std::string method_name(EigenMethod method) {
  return method == EigenMethod::PowerIteration ? "power-iteration" : "oracle-fallback";
}

void append_table(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
}

}  // namespace

std::string winner_name(LowerBoundWinner winner) {
  switch (winner) {
    case LowerBoundWinner::Lwm: return "lwm";
    case LowerBoundWinner::New: return "new";
    case LowerBoundWinner::Tie: return "tie";
  }
  return "?";
}

std::string render_text(const BoundsReport& report, const std::vector<Violation>& violations) {
  std::ostringstream out;
  const Graph& g = report.graph;
  out << "graph: n=" << g.vertex_count() << ", m=" << g.edge_count() << '\n';
  out << "rho: " << fmt(report.spectral.rho, "%.10g") << "  (" << method_name(report.spectral.method)
      << ", " << report.spectral.iterations << " iterations, residual "
      << fmt(report.spectral.residual, "%.2e") << ")\n";

  if (!report.note.empty()) {
    out << "note: " << report.note << '\n';
    return out.str();
  }

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"vertex", "degree", "lwm", "new", "x", "cg", "winner"});
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const VertexBounds& row = report.rows[i];
    cells.push_back({vertex_name(report, row.vertex), std::to_string(row.degree),
                     fmt5(row.lower_lwm), fmt5(row.lower_new), fmt5(row.actual),
                     fmt5(row.upper_cg), winner_name(report.winner_per_vertex[i])});
  }
  append_table(out, cells);

  out << "x_max: " << fmt5(report.x_max) << "  (bound " << fmt5(report.pr_upper) << ")\n";
  out << "max-entry equality: " << (report.pr_equality ? "yes (star)" : "no") << '\n';
  out << "upper-bound equality at:";
  bool any = false;
  for (std::size_t i = 0; i < report.cg_equality_flags.size(); ++i)
    if (report.cg_equality_flags[i]) {
      out << ' ' << vertex_name(report, static_cast<Vertex>(i));
      any = true;
    }
  if (!any) out << " none";
  out << '\n';

  if (violations.empty()) {
    out << "verification: PASS (0 violations)\n";
  } else {
    out << "verification: FAIL (" << violations.size() << " violations)\n";
    for (const Violation& v : violations)
      out << "  " << v.inequality << " at vertex " << v.vertex << " by "
          << fmt(v.magnitude, "%.3e") << " [" << v.graph << "]\n";
  }
  return out.str();
}

std::string render_csv(const BoundsReport& report) {
  std::ostringstream out;
  out << "vertex,label,degree,rho_deleted,lower_lwm,lower_new,actual,upper_cg,exact_sq,"
         "winner,cg_equality\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const VertexBounds& row = report.rows[i];
    out << row.vertex << ',' << vertex_name(report, row.vertex) << ',' << row.degree << ','
        << fmt_full(row.rho_deleted) << ',' << fmt_full(row.lower_lwm) << ','
        << fmt_full(row.lower_new) << ',' << fmt_full(row.actual) << ','
        << fmt_full(row.upper_cg) << ',' << fmt_full(row.exact_sq) << ','
        << winner_name(report.winner_per_vertex[i]) << ','
        << (report.cg_equality_flags[i] ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string render_json(const BoundsReport& report, const std::vector<Violation>& violations) {
  nlohmann::json doc;
  const Graph& g = report.graph;
  doc["graph"]["n"] = g.vertex_count();
  doc["graph"]["m"] = g.edge_count();
  if (g.vertex_count() <= 62) doc["graph"]["graph6"] = encode_graph6(g);
  doc["rho"] = report.spectral.rho;
  doc["method"] = method_name(report.spectral.method);
  doc["iterations"] = report.spectral.iterations;
  doc["residual"] = report.spectral.residual;
  doc["x_max"] = report.x_max;
  doc["pr_upper"] = report.pr_upper;
  doc["pr_equality"] = report.pr_equality;
  if (!report.note.empty()) doc["note"] = report.note;

  doc["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const VertexBounds& row = report.rows[i];
    nlohmann::json item;
    item["vertex"] = row.vertex;
    if (g.has_labels()) item["label"] = g.labels()[row.vertex];
    item["degree"] = row.degree;
    item["rho_deleted"] = row.rho_deleted;
    item["lower_lwm"] = row.lower_lwm;
    item["lower_new"] = row.lower_new;
    item["actual"] = row.actual;
    item["upper_cg"] = row.upper_cg;
    item["exact_sq"] = row.exact_sq;
    item["winner"] = winner_name(report.winner_per_vertex[i]);
    item["cg_equality"] = static_cast<bool>(report.cg_equality_flags[i]);
    doc["rows"].push_back(std::move(item));
  }

  doc["violations"] = nlohmann::json::array();
  for (const Violation& v : violations)
    doc["violations"].push_back({{"graph", v.graph},
                                 {"vertex", v.vertex},
                                 {"inequality", v.inequality},
                                 {"magnitude", v.magnitude}});
  return doc.dump(2);
}

}  // namespace perron
