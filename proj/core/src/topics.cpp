#include "hot/topics.hpp"

#include <algorithm>

#include <json.hpp>

#include "hot/errors.hpp"

namespace hot {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

// Leading/trailing punctuation, including the common typographic quotes.
std::size_t punct_prefix(std::string_view s) {
  if (s.empty()) return 0;
  if (is_ascii_punct(s.front())) return 1;
  for (std::string_view q : {"\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99", "\xC2\xAB",
                             "\xC2\xBB", "\xE2\x80\xA2", "\xE2\x80\x93", "\xE2\x80\x94"})
    if (s.starts_with(q)) return q.size();
  return 0;
}

std::size_t punct_suffix(std::string_view s) {
  if (s.empty()) return 0;
  if (is_ascii_punct(s.back())) return 1;
  for (std::string_view q : {"\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99", "\xC2\xAB",
                             "\xC2\xBB", "\xE2\x80\xA6"})
    if (s.ends_with(q)) return q.size();
  return 0;
}

std::string_view strip_bullet(std::string_view line) {
  for (std::string_view b : {"- ", "* ", "\xE2\x80\xA2 "})
    if (line.starts_with(b)) return trim(line.substr(b.size()));
  std::size_t digits = 0;
  while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9') ++digits;
  if (digits > 0 && digits + 1 < line.size() && (line[digits] == '.' || line[digits] == ')') &&
      is_space(line[digits + 1]))
    return trim(line.substr(digits + 2));
  return line;
}

std::optional<std::vector<std::string>> parse_json_array(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) return std::nullopt;
  nlohmann::json doc = nlohmann::json::parse(text.substr(open, close - open + 1), nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& item : doc) {
    if (!item.is_string()) continue;
    auto t = trim(item.get_ref<const std::string&>());
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace

std::string normalize_topic(std::string_view topic) {
  std::string_view s = trim(topic);
  for (;;) {
    const std::size_t before = s.size();
    while (std::size_t n = punct_prefix(s)) s = trim(s.substr(n));
    while (std::size_t n = punct_suffix(s)) s = trim(s.substr(0, s.size() - n));
    if (s.size() == before) break;
  }
  const std::string lowered = fold_case(s);
  std::string out;
  out.reserve(lowered.size());
  bool pending_space = false;
  for (char c : lowered) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::optional<std::vector<std::string>> parse_topic_list(std::string_view response) {
  std::string_view body = trim(response);
  if (body.empty()) return std::nullopt;
  if (auto arr = parse_json_array(body); arr && !arr->empty()) return arr;

  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t nl = body.find('\n', pos);
    if (nl == std::string_view::npos) nl = body.size();
    std::string_view line = trim(body.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.starts_with("```") || line.ends_with(":")) continue;
    line = strip_bullet(line);
    if (!line.empty() && !normalize_topic(line).empty()) out.emplace_back(line);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string_view to_string(TopicLevel level) {
  return level == TopicLevel::document ? "document" : "sentence";
}

TopicLevel parse_topic_level(std::string_view name) {
  if (name == "document" || name == "doc") return TopicLevel::document;
  if (name == "sentence") return TopicLevel::sentence;
  throw ConfigError("unknown topic level '" + std::string(name) + "' (expected document or sentence)");
}

const PromptTemplate& topic_prompt(TopicLevel level) {
  static const PromptTemplate kDocument{
      "document-v1",
      "You label documents with topics. List the 3-7 main topics of the document given by the user. "
      "Each topic is a short noun phrase. Answer with only a JSON array of strings, for example "
      "[\"topic one\", \"topic two\", \"topic three\"], and nothing else."};
  static const PromptTemplate kSentence{
      "sentence-v1",
      "You label sentences with topics. List the topics of the sentence given by the user. "
      "Each topic is a short noun phrase. Answer with only a JSON array of strings, for example "
      "[\"topic one\", \"topic two\"], and nothing else."};
  return level == TopicLevel::document ? kDocument : kSentence;
}

const PromptTemplate& pair_topic_prompt() {
  static const PromptTemplate kPair{
      "pair-v1",
      "The user gives two sentences taken from different documents. State the single common topic "
      "the two sentences share as a short noun phrase. Answer with only a JSON array holding exactly "
      "one string, for example [\"shared topic\"], and nothing else."};
  return kPair;
}

std::vector<ChatMessage> topic_messages(TopicLevel level, std::string_view unit_text) {
  return {{"system", std::string(topic_prompt(level).system)}, {"user", std::string(unit_text)}};
}

std::vector<ChatMessage> pair_topic_messages(std::string_view first, std::string_view second) {
  std::string user = "Sentence 1: ";
  user.append(first);
  user += "\nSentence 2: ";
  user.append(second);
  return {{"system", std::string(pair_topic_prompt().system)}, {"user", std::move(user)}};
}

bool TopicEdgeAccumulator::add(std::string_view topic, const NodeId& doc) {
  std::string key = normalize_topic(topic);
  if (key.empty()) return false;
  auto& entry = keys_[std::move(key)];
  entry.members[doc] = true;
  ++entry.surfaces[std::string(trim(topic))];
  return true;
}

Hypergraph TopicEdgeAccumulator::build(const Corpus& corpus, std::size_t min_members) const {
  HypergraphBuilder builder;
  for (const auto& doc : corpus.documents()) builder.add_node(doc.id, document_node_text(doc));
  for (const auto& [key, entry] : keys_) {
    if (entry.members.size() < min_members) continue;
    // Most frequent surface form; map order makes the smallest win ties.
    const auto best = std::max_element(entry.surfaces.begin(), entry.surfaces.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<NodeId> members;
    members.reserve(entry.members.size());
    for (const auto& [doc, _] : entry.members) members.push_back(doc);
    builder.add_hyperedge(HyperedgeId(key), best->first, std::move(members));
  }
  return builder.build();
}

}  // namespace hot
