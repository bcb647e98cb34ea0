#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/hypergraph.hpp"

namespace hot {

/// Candidate hyperedge for one vocabulary word: every document containing
/// the word, scored by the mean TF-IDF of the word over those documents.
struct ScoredWordEdge {
  std::string word;
  std::vector<NodeId> members;  // corpus order
  double score = 0.0;
};

/// One candidate per vocabulary term occurring in at least two documents,
/// in vocabulary order.
std::vector<ScoredWordEdge> build_word_edges(const TfIdfStats& stats);

/// Number of edges kept for a fraction of `count` candidates:
/// ceil(fraction * count), at least 1 when count > 0. A relative slack of
/// 1e-9 absorbs binary rounding of decimal fractions (0.07 * 100).
std::size_t keep_count(double fraction, std::size_t count);

/// Sorts candidates by score (descending, ties by word ascending) and keeps
/// the top `fraction`. The HoT contains every corpus document as a node;
/// each kept word becomes a hyperedge whose id and label are the word.
/// `fraction` must lie in (0, 1]. An empty candidate list yields an edgeless
/// HoT and a message in `warnings` (when provided).
Hypergraph prune_top_fraction(std::span<const ScoredWordEdge> edges, double fraction,
                              const Corpus& corpus, std::vector<std::string>* warnings = nullptr);

/// Convenience: stats, candidates and pruning in one call.
Hypergraph construct_allwords(const Corpus& corpus, double fraction,
                              std::vector<std::string>* warnings = nullptr);

}  // namespace hot
