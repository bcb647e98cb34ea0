#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/hypergraph.hpp"
#include "hot/providers.hpp"
#include "hot/topics.hpp"

namespace hot {

/// A document, or one sentence of it.
struct UnitRef {
  NodeId doc_id;
  std::optional<std::size_t> sentence;

  std::string describe() const;
  friend auto operator<=>(const UnitRef&, const UnitRef&) = default;
  friend bool operator==(const UnitRef&, const UnitRef&) = default;
};

struct TopicExtraction {
  UnitRef source;
  std::vector<std::string> topics;      // as returned by the model
  std::vector<std::string> normalized;  // normalize_topic of each, empty keys dropped
};

TopicExtraction make_extraction(UnitRef source, std::vector<std::string> topics);

struct ExtractionOutcome {
  TopicExtraction extraction;
  std::optional<std::string> warning;  // set when the answer could not be parsed
};

/// Sends the fixed prompt for `level` with `unit_text`. An unparseable answer
/// is retried once, then yields an empty extraction plus a warning. Throws
/// InputError for empty text and ProviderError (naming the unit) when the
/// provider fails.
ExtractionOutcome extract_topics(std::string_view unit_text, TopicLevel level, ChatProvider& provider,
                                 const UnitRef& unit);

/// One hyperedge per distinct normalized topic over the documents whose
/// extractions produced it; size-1 edges are kept. Every corpus document is a
/// node. Deterministic in the extraction list (order does not matter).
Hypergraph assemble_topic_hot(std::span<const TopicExtraction> extractions, const Corpus& corpus);

/// Extraction cache line (JSON Lines):
///   { "doc_id": str, "level": "document"|"sentence", "normalized": [str],
///     "sentence": int|null, "text_hash": hex str, "topics": [str] }
/// A line is reused only if level, unit and hash of the unit text all match.
std::string extraction_cache_line(const TopicExtraction& e, TopicLevel level, std::string_view unit_text);

struct LlmConstructionOptions {
  TopicLevel level = TopicLevel::document;
  unsigned max_concurrency = 4;
  std::optional<std::filesystem::path> cache_path;
};

struct LlmConstructionResult {
  Hypergraph hot;
  std::vector<TopicExtraction> extractions;  // corpus order, then sentence order
  std::vector<std::string> warnings;
  std::size_t provider_units = 0;
  std::size_t cached_units = 0;
};

/// LLM-Doc / LLM-Sentence construction: extract topics per unit (concurrently,
/// up to max_concurrency), append each finished unit to the cache, then
/// assemble. Sentences of every document are units at sentence level.
LlmConstructionResult construct_llm(const Corpus& corpus, ChatProvider& provider,
                                    const LlmConstructionOptions& options);

}  // namespace hot
