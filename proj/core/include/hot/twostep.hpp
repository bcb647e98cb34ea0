#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/hypergraph.hpp"
#include "hot/providers.hpp"

namespace hot {

struct SentenceRef {
  NodeId doc_id;
  std::size_t index = 0;

  friend auto operator<=>(const SentenceRef&, const SentenceRef&) = default;
  friend bool operator==(const SentenceRef&, const SentenceRef&) = default;
};

struct SentenceCandidate {
  SentenceRef ref;
  double score = 0.0;
  std::string text;
  std::vector<double> embedding;  // unit norm once embedded
};

/// Keeps the top `k_per_doc` sentences of each document by sentence_score
/// (descending, ties by sentence index). Output is grouped by document in
/// corpus order, best sentence first. Documents with fewer than k sentences
/// keep all of them.
std::vector<SentenceCandidate> filter_sentences(const Corpus& corpus, const TfIdfStats& stats,
                                                std::size_t k_per_doc);

struct EmbedOptions {
  std::size_t batch_size = 64;
  unsigned max_concurrency = 4;
};

/// Fills `embedding` of every candidate with the provider's vector scaled to
/// unit length. Batches may run concurrently. Throws ConfigError when
/// dimensions differ or a vector is zero, ProviderError naming the batch
/// when the provider fails.
void embed(std::span<SentenceCandidate> candidates, EmbeddingProvider& provider, const EmbedOptions& options = {});

/// Cross-document candidate pair, `first` < `second` by SentenceRef.
struct RankedPair {
  std::size_t first = 0;   // positions in the candidate list
  std::size_t second = 0;
  double similarity = 0.0;
};

/// Produces candidate pairs best-first. The exact ranker enumerates every
/// pair; an approximate index can be swapped in behind this interface.
class PairRanker {
 public:
  virtual ~PairRanker() = default;
  virtual std::vector<RankedPair> rank(std::span<const SentenceCandidate> candidates) const = 0;
};

/// All cross-document pairs scored by the dot product of the stored unit
/// vectors, sorted by similarity descending, then (first ref, second ref)
/// ascending.
class ExactPairRanker final : public PairRanker {
 public:
  std::vector<RankedPair> rank(std::span<const SentenceCandidate> candidates) const override;
};

struct SentencePair {
  std::size_t first = 0;
  std::size_t second = 0;
  double similarity = 0.0;
  bool diverse = false;  // chosen while no sentence or document repeated
};

struct PairSelection {
  std::vector<SentencePair> pairs;
  std::vector<std::string> warnings;
};

/// Two-phase selection over the ranked pairs. Phase one walks the ranking and
/// takes a pair only if neither its sentences nor its documents were used
/// yet. If that yields fewer than `k_pairs`, phase two walks the ranking again
/// and fills up with any pair not already taken. Asking for more pairs than
/// exist returns them all with a warning. Needs at least two candidates.
PairSelection select_pairs(std::span<const SentenceCandidate> candidates, std::size_t k_pairs,
                           const PairRanker& ranker = ExactPairRanker{});

struct PairTopic {
  SentenceRef first;
  SentenceRef second;
  std::string topic;  // first entry of the model answer
};

struct PairTopicOptions {
  unsigned max_concurrency = 4;
  /// JSON Lines cache; one line per answered pair:
  ///   { "first": {"doc_id", "index"}, "second": {...}, "text_hash": hex, "topic": str }
  std::optional<std::filesystem::path> cache_path;
};

struct PairTopicResult {
  Hypergraph hot;
  std::vector<PairTopic> topics;  // selection order; skipped pairs absent
  std::vector<std::string> warnings;
  std::size_t skipped_pairs = 0;
};

/// Asks the model for the common topic of each pair and merges pairs with
/// the same normalized topic into one hyperedge over their documents. A pair
/// whose call fails or whose answer cannot be parsed (after one retry) is
/// skipped with a warning. If every pair fails at the provider, the last
/// ProviderError is rethrown.
PairTopicResult extract_pair_topics(std::span<const SentencePair> pairs,
                                    std::span<const SentenceCandidate> candidates, ChatProvider& provider,
                                    const Corpus& corpus, const PairTopicOptions& options = {});

struct TwoStepOptions {
  std::size_t k_sentences = 5;
  std::size_t k_pairs = 0;  // 0: ten times the document count
  std::optional<std::size_t> prune_min_size;
  EmbedOptions embedding;
  PairTopicOptions topics;
};

struct TwoStepResult {
  Hypergraph hot;
  std::vector<SentenceCandidate> candidates;
  std::vector<SentencePair> pairs;
  std::vector<PairTopic> topics;
  std::vector<std::string> warnings;
  std::size_t unpruned_edge_count = 0;
};

TwoStepResult construct_twostep(const Corpus& corpus, ChatProvider& chat, EmbeddingProvider& embedder,
                                const TwoStepOptions& options);

}  // namespace hot
