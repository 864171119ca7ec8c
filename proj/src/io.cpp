#include "antimagic/io.hpp"

#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

using nlohmann::json;

json to_json(const Document& doc) {
  json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["n"] = doc.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["provenance"] = doc.graph.provenance();
  if (doc.labeling) j["labels"] = doc.labeling->labels;
  if (!doc.checks.empty()) j["checks"] = doc.checks;
  if (!doc.construction.empty()) j["construction"] = doc.construction;
  return j;
}

Document document_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "document must be a JSON object");
    Document doc;
    doc.name = j.value("name", std::string());
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::InvalidInput, "edges must be [u, v] pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    if (j.contains("provenance")) {
      doc.graph = Graph(n, std::move(edges), j["provenance"].get<std::vector<std::vector<int>>>());
    } else {
      doc.graph = Graph(n, std::move(edges));
    }
    if (j.contains("labels")) {
      doc.labeling = EdgeLabeling{j["labels"].get<std::vector<int>>()};
      if (doc.labeling->size() != doc.graph.edge_count()) {
        throw Error(ErrorKind::InvalidInput, "label count differs from edge count");
      }
    }
    if (j.contains("checks")) doc.checks = j["checks"];
    if (j.contains("construction")) doc.construction = j["construction"];
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed document: ") + e.what());
  }
}

std::string dump_document(const Document& doc) { return to_json(doc).dump() + "\n"; }

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("not JSON: ") + e.what());
  }
  return document_from_json(j);
}

std::string to_dot(const Graph& g, const EdgeLabeling* f) {
  std::vector<Sum> sums;
  if (f) sums = induced_coloring(g, *f).sums;
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << g.vertex_name(v);
    if (f) os << "\\n" << sums[v];
    os << "\"];\n";
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    os << "  " << e.u << " -- " << e.v;
    if (f) os << " [label=\"" << f->labels[i] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace antimagic
