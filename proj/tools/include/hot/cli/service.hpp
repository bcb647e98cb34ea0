#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hot/hypergraph.hpp"

namespace httplib {
class Server;
}

namespace hot::cli {

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

/// Read-only JSON API over one loaded HoT.
///
///   GET /api/meta             {node_count, edge_count, label}
///   GET /api/nodes/{id}       node text and its hyperedges
///   GET /api/hyperedges/{id}  label and members with titles and snippets
///   GET /api/search?q=&limit= nodes and hyperedges whose id, title or label
///                             contains q, case-insensitively
///   GET /api/neighbors/{id}   one-hop nodes grouped by shared hyperedge
///
/// A node's title is the first line of its text. Unknown ids answer 404 with
/// {"error": ...}. Responses depend only on the HoT and the request.
class HotService {
 public:
  HotService(Hypergraph hot, std::string label);

  /// `path` is already percent-decoded.
  ApiResponse get(std::string_view path, const QueryParams& params = {}) const;

  const Hypergraph& hot() const noexcept { return hot_; }

  static constexpr std::size_t kSnippetChars = 240;
  static constexpr std::size_t kDefaultLimit = 20;
  static constexpr std::size_t kMaxLimit = 200;

 private:
  ApiResponse meta() const;
  ApiResponse node(std::string_view id) const;
  ApiResponse hyperedge(std::string_view id) const;
  ApiResponse search(const QueryParams& params) const;
  ApiResponse neighbors(std::string_view id) const;

  Hypergraph hot_;
  std::string label_;
  std::vector<std::string> titles_;         // per node
  std::vector<std::string> folded_titles_;  // lowercased, for search
};

/// First line of a node text, at most 120 bytes, cut at a word boundary.
std::string node_title(std::string_view text);
/// Text cut to at most `max_chars` bytes at a word boundary, "..." appended when cut.
std::string snippet(std::string_view text, std::size_t max_chars);

/// Registers the API on `server`; "/" serves `ui_dir` when given, otherwise a
/// built-in minimal browser page. The service must outlive the server.
void mount(httplib::Server& server, const HotService& service,
           const std::optional<std::filesystem::path>& ui_dir = std::nullopt);

/// Minimal single-page browser bundled with the binary.
std::string_view builtin_index_html();

}  // namespace hot::cli
