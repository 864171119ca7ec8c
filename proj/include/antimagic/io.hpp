#pragma once

// JSON documents for graphs and labelings, plus DOT export.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// A graph, an optional labeling, and free-form metadata.  "checks" holds
// expected facts that verify re-evaluates, e.g. {"colors": [52, 66, 68]}.
struct Document {
  std::string name;
  Graph graph;
  std::optional<EdgeLabeling> labeling;
  nlohmann::json checks = nlohmann::json::object();
  nlohmann::json construction = nlohmann::json::object();
};

nlohmann::json to_json(const Document& doc);
// Throws InvalidInput on malformed documents.
Document document_from_json(const nlohmann::json& j);

std::string dump_document(const Document& doc);
Document parse_document(const std::string& text);

// Vertices carry "name\nsum" when a labeling is given; edges carry labels.
std::string to_dot(const Graph& g, const EdgeLabeling* f = nullptr);

}  // namespace antimagic
