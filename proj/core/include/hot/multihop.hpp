#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "hot/metrics.hpp"

namespace hot {

/// MultiHop-RAG release converted to the native inputs: a JSONL corpus
/// ({id, title, text} per line, ids "mh-0000" in corpus order) and the
/// relevance family (one set per query from its evidence documents).
struct MultihopConversion {
  std::string corpus_jsonl;
  RelevanceSets relevance;
  std::size_t article_count = 0;
  std::size_t query_count = 0;
  std::size_t dropped_queries = 0;      // fewer than two distinct matched documents
  std::size_t unmatched_evidence = 0;   // evidence items matching no article
};

/// `corpus_json` is the release's article array ({title, body, url, ...});
/// `queries_json` its query array with `evidence_list` entries matched to
/// articles by url, then by title. Throws ParseError on malformed input.
MultihopConversion convert_multihop(std::string_view corpus_json, std::string_view queries_json);

/// Reads corpus.json and MultiHopRAG.json from `dir`.
MultihopConversion convert_multihop_dir(const std::filesystem::path& dir);

}  // namespace hot
