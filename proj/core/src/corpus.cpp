#include "hot/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "hot/errors.hpp"

namespace hot {

using nlohmann::json;

Document make_document(NodeId id, std::string title, std::string text, const Tokenizer& tokenizer) {
  Document doc;
  doc.id = std::move(id);
  doc.title = std::move(title);
  doc.text = std::move(text);
  doc.tokens = tokenizer(doc.text);
  auto pieces = segment_sentences(doc.text);
  doc.sentences.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Sentence s;
    s.doc_id = doc.id;
    s.index = i;
    s.tokens = tokenizer(pieces[i]);
    s.text = std::move(pieces[i]);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

std::string document_node_text(const Document& doc) {
  if (doc.title.empty()) return doc.text;
  return doc.title + "\n\n" + doc.text;
}

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  lookup_.reserve(documents_.size());
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (documents_[i].id.empty()) throw InputError("document id must be non-empty");
    if (!lookup_.emplace(documents_[i].id, i).second)
      throw InputError("duplicate document id '" + documents_[i].id.str() + "'");
  }
}

std::optional<std::size_t> Corpus::find(const NodeId& id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

IngestResult ingest(std::istream& in, const Tokenizer& tokenizer) {
  IngestResult result;
  std::vector<Document> docs;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++record;
    const std::string where = "record " + std::to_string(record) + " (line " + std::to_string(line_no) + ")";
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what(), where);
    }
    if (!obj.is_object()) throw ParseError("record must be a JSON object", where);
    auto id = obj.find("id");
    if (id == obj.end() || !id->is_string()) throw ParseError("missing string field 'id'", where);
    auto text = obj.find("text");
    if (text == obj.end() || !text->is_string()) throw ParseError("missing string field 'text'", where);
    std::string title;
    if (auto t = obj.find("title"); t != obj.end() && !t->is_null()) {
      if (!t->is_string()) throw ParseError("field 'title' must be a string", where);
      title = t->get<std::string>();
    }
    const auto& id_str = id->get_ref<const std::string&>();
    if (id_str.empty()) throw ParseError("field 'id' must be non-empty", where);
    if (auto [it, fresh] = seen.emplace(id_str, record); !fresh)
      throw InputError("duplicate document id '" + id_str + "' at " + where + " (first seen at record " +
                       std::to_string(it->second) + ")");
    const auto& body = text->get_ref<const std::string&>();
    if (body.find_first_not_of(" \t\r\n") == std::string::npos) {
      ++result.skipped_empty;
      continue;
    }
    docs.push_back(make_document(NodeId(id_str), std::move(title), body, tokenizer));
  }
  result.corpus = Corpus(std::move(docs));
  return result;
}

TfIdfStats TfIdfStats::build(const Corpus& corpus) {
  TfIdfStats stats;
  const auto docs = corpus.documents();
  stats.doc_ids_.reserve(docs.size());
  for (std::uint32_t d = 0; d < docs.size(); ++d) {
    stats.doc_ids_.push_back(docs[d].id);
    stats.doc_lookup_.emplace(docs[d].id, d);
  }

  // term -> postings, docs visited in order so postings come out sorted.
  std::map<std::string, std::vector<Posting>, std::less<>> table;
  for (std::uint32_t d = 0; d < docs.size(); ++d) {
    std::map<std::string_view, std::uint32_t> counts;
    for (const auto& tok : docs[d].tokens) ++counts[tok];
    for (const auto& [term, tf] : counts) {
      auto it = table.find(term);
      if (it == table.end()) it = table.emplace(std::string(term), std::vector<Posting>{}).first;
      it->second.push_back(Posting{d, tf});
    }
  }

  stats.terms_.reserve(table.size());
  stats.offsets_.reserve(table.size() + 1);
  stats.offsets_.push_back(0);
  for (auto& [term, postings] : table) {
    stats.term_lookup_.emplace(term, static_cast<TermIndex>(stats.terms_.size()));
    stats.terms_.push_back(term);
    stats.postings_.insert(stats.postings_.end(), postings.begin(), postings.end());
    stats.offsets_.push_back(stats.postings_.size());
  }
  return stats;
}

std::optional<TfIdfStats::TermIndex> TfIdfStats::find_term(std::string_view term) const {
  auto it = term_lookup_.find(std::string(term));
  if (it == term_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> TfIdfStats::find_document(const NodeId& id) const {
  auto it = doc_lookup_.find(id);
  if (it == doc_lookup_.end()) return std::nullopt;
  return it->second;
}

double TfIdfStats::idf(TermIndex t) const {
  return std::log(static_cast<double>(document_count()) / static_cast<double>(df(t)));
}

std::span<const TfIdfStats::Posting> TfIdfStats::postings(TermIndex t) const {
  if (t >= terms_.size()) throw InputError("term index out of range");
  return std::span<const Posting>(postings_).subspan(offsets_[t], offsets_[t + 1] - offsets_[t]);
}

std::uint32_t TfIdfStats::tf(TermIndex t, std::uint32_t doc) const {
  const auto list = postings(t);
  auto it = std::lower_bound(list.begin(), list.end(), doc,
                             [](const Posting& p, std::uint32_t d) { return p.doc < d; });
  return (it != list.end() && it->doc == doc) ? it->tf : 0;
}

double tfidf(std::string_view term, const NodeId& doc, const TfIdfStats& stats) {
  auto t = stats.find_term(term);
  if (!t) throw InputError("term '" + std::string(term) + "' is not in the vocabulary");
  auto d = stats.find_document(doc);
  if (!d) throw InputError("unknown document id '" + doc.str() + "'");
  const std::uint32_t count = stats.tf(*t, *d);
  if (count == 0) return 0.0;
  return static_cast<double>(count) * stats.idf(*t);
}

double sentence_score(const Sentence& sentence, const TfIdfStats& stats) {
  if (sentence.tokens.empty()) return 0.0;
  std::map<std::string_view, std::uint32_t> counts;
  for (const auto& tok : sentence.tokens) ++counts[tok];
  double sum = 0.0;
  for (const auto& [term, count] : counts) {
    if (auto t = stats.find_term(term)) sum += static_cast<double>(count) * stats.idf(*t);
  }
  return sum / static_cast<double>(sentence.tokens.size());
}

}  // namespace hot
