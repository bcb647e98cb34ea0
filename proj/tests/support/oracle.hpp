#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/hypergraph.hpp"
#include "hot/metrics.hpp"
#include "hot/twostep.hpp"

// Brute-force reference implementations. They share no code with the library
// beyond the data types, and favour obviousness over speed.
namespace hot::oracle {

/// Clique expansion into an adjacency matrix, then Floyd-Warshall. -1 marks
/// unreachable pairs; the diagonal is 0.
std::vector<std::vector<int>> all_pairs(const Hypergraph& hot);

struct Metrics {
  std::optional<double> drel;
  std::optional<double> drand;
  std::optional<double> er;
  std::optional<double> rdp;
  double sigma_rel = 0.0;
  double sigma_rand = 0.0;
};

/// Direct evaluation of the metric formulas on an all-pairs matrix.
Metrics metrics(const Hypergraph& hot, const SetFamily& relevance, const SetFamily& random_sets);

/// Relevant-pair fraction of a member list by exhaustive pair enumeration.
std::optional<double> relevant_fraction(const std::vector<NodeIndex>& members, const SetFamily& relevance);

/// term -> number of documents whose token list contains it.
std::map<std::string, std::size_t> document_frequency(const Corpus& corpus);

/// The two-phase pair rule written out literally: rank every cross-document
/// pair by recomputed cosine, take diverse pairs first, then fill.
std::vector<std::pair<std::size_t, std::size_t>> select_pairs(const std::vector<SentenceCandidate>& candidates,
                                                              std::size_t k);

}  // namespace hot::oracle
