#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hot/ids.hpp"
#include "hot/text.hpp"

namespace hot {

struct Sentence {
  NodeId doc_id;
  std::size_t index = 0;
  std::string text;
  std::vector<std::string> tokens;
};

struct Document {
  NodeId id;
  std::string title;
  std::string text;
  std::vector<Sentence> sentences;
  std::vector<std::string> tokens;  // tokenizer output over `text`
};

/// Segments and tokenizes one record.
Document make_document(NodeId id, std::string title, std::string text, const Tokenizer& tokenizer);

/// Text stored on the HoT node for a document: the title, a blank line, then
/// the body; just the body when there is no title.
std::string document_node_text(const Document& doc);

/// Ordered document collection with unique ids.
class Corpus {
 public:
  Corpus() = default;
  /// Throws InputError naming the first duplicate id.
  explicit Corpus(std::vector<Document> documents);

  std::span<const Document> documents() const noexcept { return documents_; }
  std::size_t size() const noexcept { return documents_.size(); }
  bool empty() const noexcept { return documents_.empty(); }
  const Document& operator[](std::size_t i) const { return documents_.at(i); }
  std::optional<std::size_t> find(const NodeId& id) const;

 private:
  std::vector<Document> documents_;
  std::unordered_map<NodeId, std::size_t> lookup_;
};

struct IngestResult {
  Corpus corpus;
  std::size_t skipped_empty = 0;
};

/// Reads JSON Lines records { "id": str, "title": str?, "text": str }.
/// Blank lines are ignored; records whose text is empty (after trimming)
/// are skipped and counted. Throws ParseError naming the record number for
/// malformed lines or missing fields, InputError for duplicate ids.
IngestResult ingest(std::istream& in, const Tokenizer& tokenizer);

/// Corpus-level counts for TF-IDF. Document frequency is over document token
/// sets; term frequency is the raw count of a term in a document.
class TfIdfStats {
 public:
  using TermIndex = std::uint32_t;
  struct Posting {
    std::uint32_t doc;  // position in the corpus
    std::uint32_t tf;
  };

  static TfIdfStats build(const Corpus& corpus);

  std::size_t document_count() const noexcept { return doc_ids_.size(); }
  std::size_t vocabulary_size() const noexcept { return terms_.size(); }
  /// Sorted ascending.
  std::span<const std::string> vocabulary() const noexcept { return terms_; }
  const std::string& term(TermIndex t) const { return terms_.at(t); }
  std::optional<TermIndex> find_term(std::string_view term) const;
  std::optional<std::uint32_t> find_document(const NodeId& id) const;
  const NodeId& document_id(std::uint32_t doc) const { return doc_ids_.at(doc); }

  std::uint32_t df(TermIndex t) const { return static_cast<std::uint32_t>(postings(t).size()); }
  /// ln(N / df): no smoothing.
  double idf(TermIndex t) const;
  /// Postings sorted by document position.
  std::span<const Posting> postings(TermIndex t) const;
  std::uint32_t tf(TermIndex t, std::uint32_t doc) const;

 private:
  std::vector<NodeId> doc_ids_;
  std::unordered_map<NodeId, std::uint32_t> doc_lookup_;
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermIndex> term_lookup_;
  std::vector<std::size_t> offsets_;
  std::vector<Posting> postings_;
};

/// tf(term, doc) * ln(N / df(term)); 0 when the term does not occur in the
/// document. Unknown terms or documents raise InputError.
double tfidf(std::string_view term, const NodeId& doc, const TfIdfStats& stats);

/// Mean TF-IDF of a sentence: sum over its distinct terms of
/// (count in sentence) * idf, divided by the token count including repeats.
/// Terms outside the vocabulary contribute zero; an empty sentence scores 0.
double sentence_score(const Sentence& sentence, const TfIdfStats& stats);

}  // namespace hot
