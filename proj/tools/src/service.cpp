#include "hot/cli/service.hpp"

#include <algorithm>
#include <charconv>

#include <httplib.h>
#include <json.hpp>

#include "hot/errors.hpp"
#include "hot/text.hpp"

namespace hot::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kTitleChars = 120;

ApiResponse json_response(int status, const json& body) { return {status, "application/json", body.dump() + "\n"}; }

ApiResponse error(int status, const std::string& message) { return json_response(status, json{{"error", message}}); }

// Largest cut <= max that does not split a UTF-8 sequence.
std::size_t utf8_floor(std::string_view text, std::size_t max) {
  if (max >= text.size()) return text.size();
  while (max > 0 && (static_cast<unsigned char>(text[max]) & 0xC0) == 0x80) --max;
  return max;
}

std::string_view cut_at_word(std::string_view text, std::size_t max) {
  if (text.size() <= max) return text;
  std::size_t cut = utf8_floor(text, max);
  const auto space = text.substr(0, cut + 1).find_last_of(" \t\n");
  if (space != std::string_view::npos && space > 0) cut = space;
  text = text.substr(0, cut);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) text.remove_suffix(1);
  return text;
}

std::optional<std::string_view> strip_prefix(std::string_view path, std::string_view prefix) {
  if (!path.starts_with(prefix) || path.size() == prefix.size()) return std::nullopt;
  return path.substr(prefix.size());
}

}  // namespace

std::string node_title(std::string_view text) {
  const auto nl = text.find('\n');
  if (nl != std::string_view::npos) text = text.substr(0, nl);
  return std::string(cut_at_word(text, kTitleChars));
}

std::string snippet(std::string_view text, std::size_t max_chars) {
  if (text.size() <= max_chars) return std::string(text);
  return std::string(cut_at_word(text, max_chars)) + "...";
}

HotService::HotService(Hypergraph hot, std::string label) : hot_(std::move(hot)), label_(std::move(label)) {
  titles_.reserve(hot_.node_count());
  folded_titles_.reserve(hot_.node_count());
  for (const auto& n : hot_.nodes()) {
    titles_.push_back(node_title(n.text));
    folded_titles_.push_back(fold_case(titles_.back()));
  }
}

ApiResponse HotService::get(std::string_view path, const QueryParams& params) const {
  if (path == "/api/meta") return meta();
  if (path == "/api/search") return search(params);
  if (auto id = strip_prefix(path, "/api/nodes/")) return node(*id);
  if (auto id = strip_prefix(path, "/api/hyperedges/")) return hyperedge(*id);
  if (auto id = strip_prefix(path, "/api/neighbors/")) return neighbors(*id);
  return error(404, "no such endpoint: " + std::string(path));
}

ApiResponse HotService::meta() const {
  return json_response(200, json{{"node_count", hot_.node_count()},
                                 {"edge_count", hot_.edge_count()},
                                 {"label", label_}});
}

ApiResponse HotService::node(std::string_view id) const {
  const auto i = hot_.find_node(NodeId(std::string(id)));
  if (!i) return error(404, "unknown node id: " + std::string(id));
  const auto& n = hot_.node(*i);
  json edges = json::array();
  for (EdgeIndex e : hot_.incident_edges(*i)) {
    const auto& edge = hot_.hyperedge(e);
    edges.push_back({{"id", edge.id.str()}, {"label", edge.label}, {"size", edge.members.size()}});
  }
  return json_response(200, json{{"id", n.id.str()}, {"title", titles_[*i]}, {"text", n.text}, {"hyperedges", edges}});
}

ApiResponse HotService::hyperedge(std::string_view id) const {
  const auto e = hot_.find_hyperedge(HyperedgeId(std::string(id)));
  if (!e) return error(404, "unknown hyperedge id: " + std::string(id));
  const auto& edge = hot_.hyperedge(*e);
  json members = json::array();
  for (NodeIndex m : edge.members) {
    members.push_back({{"id", hot_.node(m).id.str()},
                       {"title", titles_[m]},
                       {"snippet", snippet(hot_.node(m).text, kSnippetChars)}});
  }
  return json_response(200, json{{"id", edge.id.str()}, {"label", edge.label}, {"size", edge.members.size()},
                                 {"members", members}});
}

ApiResponse HotService::search(const QueryParams& params) const {
  std::string query;
  if (auto it = params.find("q"); it != params.end()) query = it->second;
  std::size_t limit = kDefaultLimit;
  if (auto it = params.find("limit"); it != params.end()) {
    const auto& s = it->second;
    std::size_t parsed = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
    if (ec != std::errc{} || end != s.data() + s.size() || parsed == 0)
      return error(400, "limit must be a positive integer");
    limit = std::min(parsed, kMaxLimit);
  }
  const std::string needle = fold_case(query);
  json nodes = json::array();
  json edges = json::array();
  bool truncated = false;
  if (!needle.empty()) {
    for (NodeIndex i = 0; i < hot_.node_count(); ++i) {
      const auto& id = hot_.node(i).id.str();
      if (folded_titles_[i].find(needle) == std::string::npos && fold_case(id).find(needle) == std::string::npos)
        continue;
      if (nodes.size() == limit) {
        truncated = true;
        break;
      }
      nodes.push_back({{"id", id}, {"title", titles_[i]}});
    }
    for (const auto& edge : hot_.hyperedges()) {
      if (fold_case(edge.label).find(needle) == std::string::npos &&
          fold_case(edge.id.str()).find(needle) == std::string::npos)
        continue;
      if (edges.size() == limit) {
        truncated = true;
        break;
      }
      edges.push_back({{"id", edge.id.str()}, {"label", edge.label}, {"size", edge.members.size()}});
    }
  }
  return json_response(200, json{{"query", query}, {"limit", limit}, {"nodes", nodes}, {"hyperedges", edges},
                                 {"truncated", truncated}});
}

ApiResponse HotService::neighbors(std::string_view id) const {
  const auto i = hot_.find_node(NodeId(std::string(id)));
  if (!i) return error(404, "unknown node id: " + std::string(id));
  json groups = json::array();
  for (EdgeIndex e : hot_.incident_edges(*i)) {
    const auto& edge = hot_.hyperedge(e);
    json nodes = json::array();
    for (NodeIndex m : edge.members)
      if (m != *i) nodes.push_back({{"id", hot_.node(m).id.str()}, {"title", titles_[m]}});
    groups.push_back({{"hyperedge", {{"id", edge.id.str()}, {"label", edge.label}}}, {"nodes", nodes}});
  }
  return json_response(200, json{{"id", std::string(id)}, {"groups", groups}});
}

void mount(httplib::Server& server, const HotService& service, const std::optional<std::filesystem::path>& ui_dir) {
  server.Get(R"(/api/.*)", [&service](const httplib::Request& req, httplib::Response& res) {
    QueryParams params(req.params.begin(), req.params.end());
    const auto r = service.get(req.path, params);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  });
  if (ui_dir) {
    if (!server.set_mount_point("/", ui_dir->string()))
      throw InputError("UI directory '" + ui_dir->string() + "' does not exist");
  } else {
    server.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(std::string(builtin_index_html()), "text/html; charset=utf-8");
    });
  }
}

}  // namespace hot::cli
