#include "hot/multihop.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <unordered_map>

#include <json.hpp>

#include "hot/errors.hpp"
#include "hot/io.hpp"

namespace hot {

using nlohmann::json;

namespace {

json parse_array(std::string_view text, const char* what) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what(), line_column(text, e.byte));
  }
  if (!doc.is_array()) throw ParseError(std::string(what) + ": expected a JSON array", "$");
  return doc;
}

std::string string_field(const json& obj, const char* key) {
  if (!obj.is_object()) return {};
  const auto it = obj.find(key);
  return it != obj.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

std::string article_id(std::size_t i) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "mh-%04zu", i);
  return buf.data();
}

}  // namespace

MultihopConversion convert_multihop(std::string_view corpus_json, std::string_view queries_json) {
  const json articles = parse_array(corpus_json, "corpus");
  const json queries = parse_array(queries_json, "queries");

  MultihopConversion out;
  std::unordered_map<std::string, std::string> by_url;
  std::unordered_map<std::string, std::string> by_title;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    const auto& a = articles[i];
    if (!a.is_object()) throw ParseError("article is not an object", "$[" + std::to_string(i) + "]");
    const std::string id = article_id(i);
    const std::string title = string_field(a, "title");
    const std::string url = string_field(a, "url");
    json line{{"id", id}, {"title", title}, {"text", string_field(a, "body")}};
    out.corpus_jsonl += line.dump() + "\n";
    // First occurrence wins for repeated urls or titles.
    if (!url.empty()) by_url.emplace(url, id);
    if (!title.empty()) by_title.emplace(title, id);
  }
  out.article_count = articles.size();
  out.query_count = queries.size();

  for (const auto& q : queries) {
    std::vector<NodeId> ids;
    const auto it = q.is_object() ? q.find("evidence_list") : q.end();
    if (q.is_object() && it != q.end() && it->is_array()) {
      for (const auto& ev : *it) {
        const std::string url = string_field(ev, "url");
        const std::string title = string_field(ev, "title");
        if (auto u = by_url.find(url); !url.empty() && u != by_url.end()) {
          ids.emplace_back(u->second);
        } else if (auto t = by_title.find(title); !title.empty() && t != by_title.end()) {
          ids.emplace_back(t->second);
        } else {
          ++out.unmatched_evidence;
        }
      }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() < 2) {
      ++out.dropped_queries;
      continue;
    }
    out.relevance.sets.push_back(std::move(ids));
  }
  return out;
}

MultihopConversion convert_multihop_dir(const std::filesystem::path& dir) {
  return convert_multihop(read_file(dir / "corpus.json"), read_file(dir / "MultiHopRAG.json"));
}

}  // namespace hot
