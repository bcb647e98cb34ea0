#include "hot/allwords.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hot/errors.hpp"

namespace hot {

std::vector<ScoredWordEdge> build_word_edges(const TfIdfStats& stats) {
  std::vector<ScoredWordEdge> out;
  for (TfIdfStats::TermIndex t = 0; t < stats.vocabulary_size(); ++t) {
    const auto postings = stats.postings(t);
    if (postings.size() < 2) continue;
    const double idf = stats.idf(t);
    ScoredWordEdge edge;
    edge.word = stats.term(t);
    edge.members.reserve(postings.size());
    double sum = 0.0;
    for (const auto& p : postings) {
      edge.members.push_back(stats.document_id(p.doc));
      sum += static_cast<double>(p.tf) * idf;
    }
    edge.score = sum / static_cast<double>(postings.size());
    out.push_back(std::move(edge));
  }
  return out;
}

std::size_t keep_count(double fraction, std::size_t count) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw InputError("fraction must lie in (0, 1], got " + std::to_string(fraction));
  if (count == 0) return 0;
  const double exact = fraction * static_cast<double>(count);
  const auto k = static_cast<std::size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  return std::clamp<std::size_t>(k, 1, count);
}

Hypergraph prune_top_fraction(std::span<const ScoredWordEdge> edges, double fraction,
                              const Corpus& corpus, std::vector<std::string>* warnings) {
  const std::size_t keep = keep_count(fraction, edges.size());
  HypergraphBuilder builder;
  for (const auto& doc : corpus.documents()) builder.add_node(doc.id, document_node_text(doc));
  if (edges.empty()) {
    if (warnings) warnings->push_back("all-words: no candidate hyperedges; emitting an edgeless HoT");
    return builder.build();
  }

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (edges[a].score != edges[b].score) return edges[a].score > edges[b].score;
    return edges[a].word < edges[b].word;
  });
  for (std::size_t k = 0; k < keep; ++k) {
    const auto& e = edges[order[k]];
    builder.add_hyperedge(HyperedgeId(e.word), e.word, e.members);
  }
  return builder.build();
}

Hypergraph construct_allwords(const Corpus& corpus, double fraction, std::vector<std::string>* warnings) {
  if (corpus.empty()) throw InputError("all-words construction needs a non-empty corpus");
  const auto stats = TfIdfStats::build(corpus);
  const auto candidates = build_word_edges(stats);
  return prune_top_fraction(candidates, fraction, corpus, warnings);
}

}  // namespace hot
