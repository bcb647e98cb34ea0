#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/hypergraph.hpp"
#include "hot/providers.hpp"

namespace hot {

/// Canonical topic key: trim, strip surrounding punctuation and quotes,
/// lowercase, collapse internal whitespace runs to one space. May return
/// an empty string (the topic is then discarded).
std::string normalize_topic(std::string_view topic);

/// Parses a model answer into topic strings.
///
/// Accepts a JSON array of strings (possibly wrapped in prose or a code
/// fence) or one topic per line with optional "-", "*", "•" or "1." / "1)"
/// bullets. Lines ending in ':' are treated as preambles. Returns nullopt
/// when nothing usable is found.
std::optional<std::vector<std::string>> parse_topic_list(std::string_view response);

enum class TopicLevel { document, sentence };
std::string_view to_string(TopicLevel level);
/// "document"/"doc" or "sentence"; anything else is a ConfigError.
TopicLevel parse_topic_level(std::string_view name);

/// Fixed prompt templates. The system message carries the instruction, the
/// user message carries only the text.
struct PromptTemplate {
  std::string_view version;
  std::string_view system;
};
const PromptTemplate& topic_prompt(TopicLevel level);
const PromptTemplate& pair_topic_prompt();

std::vector<ChatMessage> topic_messages(TopicLevel level, std::string_view unit_text);
/// User message is "Sentence 1: <a>\nSentence 2: <b>".
std::vector<ChatMessage> pair_topic_messages(std::string_view first, std::string_view second);

/// Groups topics by normalized key into hyperedges.
///
/// Each key collects the documents it was seen with; its label is the most
/// frequent trimmed surface form (ties: lexicographically smallest).
class TopicEdgeAccumulator {
 public:
  /// Returns false (and records nothing) when the topic normalizes to "".
  bool add(std::string_view topic, const NodeId& doc);

  std::size_t key_count() const noexcept { return keys_.size(); }

  /// All corpus documents become nodes (text per document_node_text); one
  /// hyperedge per key with id = key. Edges smaller than `min_members` are
  /// left out.
  Hypergraph build(const Corpus& corpus, std::size_t min_members = 1) const;

 private:
  struct Entry {
    std::map<NodeId, bool> members;
    std::map<std::string, std::size_t> surfaces;
  };
  std::map<std::string, Entry> keys_;
};

}  // namespace hot
