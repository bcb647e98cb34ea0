#include "hot/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hot/errors.hpp"
#include "hot/io.hpp"

namespace hot {

using nlohmann::json;

std::string serialize(const Hypergraph& hot) {
  json nodes = json::object();
  for (const auto& n : hot.nodes()) nodes[n.id.str()] = json{{"text", n.text}};
  json edges = json::object();
  for (const auto& e : hot.hyperedges()) {
    json members = json::array();
    for (NodeIndex m : e.members) members.push_back(hot.node(m).id.str());
    edges[e.id.str()] = json{{"label", e.label}, {"members", std::move(members)}};
  }
  json doc = json::object();
  doc["nodes"] = std::move(nodes);
  doc["hyperedges"] = std::move(edges);
  return doc.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

namespace {

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", path);
  return *it;
}

const std::string& require_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError("expected a string", path);
  return v.get_ref<const std::string&>();
}

}  // namespace

Hypergraph deserialize(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_column(bytes, e.byte));
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", "$");
  const json& nodes = require(doc, "nodes", "$");
  const json& edges = require(doc, "hyperedges", "$");
  if (!nodes.is_object()) throw ParseError("expected an object", "$.nodes");
  if (!edges.is_object()) throw ParseError("expected an object", "$.hyperedges");

  HypergraphBuilder builder;
  for (const auto& [id, body] : nodes.items()) {
    const std::string path = "$.nodes[\"" + id + "\"]";
    if (!body.is_object()) throw ParseError("expected an object", path);
    builder.add_node(NodeId(id), require_string(require(body, "text", path), path + ".text"));
  }
  for (const auto& [id, body] : edges.items()) {
    const std::string path = "$.hyperedges[\"" + id + "\"]";
    if (!body.is_object()) throw ParseError("expected an object", path);
    const std::string& label = require_string(require(body, "label", path), path + ".label");
    const json& members = require(body, "members", path);
    if (!members.is_array()) throw ParseError("expected an array", path + ".members");
    std::vector<NodeId> ids;
    ids.reserve(members.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      ids.emplace_back(
          require_string(members[k], path + ".members[" + std::to_string(k) + "]"));
    builder.add_hyperedge(HyperedgeId(id), label, std::move(ids));
  }
  return builder.build();
}

void save_hypergraph(const Hypergraph& hot, const std::filesystem::path& path) {
  write_file(path, serialize(hot));
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  return deserialize(read_file(path));
}

}  // namespace hot
