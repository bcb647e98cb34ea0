#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace hot {

/// Rule-based sentence splitter.
///
/// A boundary follows '.', '!' or '?' (plus any closing quotes/brackets)
/// when the next non-space character is an uppercase letter, a digit or an
/// opening quote. A period ending a known abbreviation ("Dr.", "U.S.", ...)
/// never splits. Blank lines (two or more consecutive line breaks) always
/// split. Sentences are trimmed; empty ones are dropped.
std::vector<std::string> segment_sentences(std::string_view text);

/// The fixed abbreviation exceptions used by segment_sentences.
const std::vector<std::string>& sentence_abbreviations();

/// Lowercases ASCII and Latin-1 letters of a UTF-8 string; other code
/// points pass through unchanged.
std::string fold_case(std::string_view text);

/// Stopword set. The built-in list ships as data/stopwords_en_v1.txt.
class Stopwords {
 public:
  /// Built-in English list.
  static const Stopwords& english_v1();
  /// One word per line, '#' comments, blank lines ignored. Words are lowercased.
  static Stopwords from_text(std::string_view text, std::string version);
  static Stopwords from_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::string& version() const noexcept { return version_; }

 private:
  std::unordered_set<std::string> words_;
  std::string version_;
};

/// Deterministic word tokenizer.
///
/// Lowercases, splits on every run of non-word characters, then drops tokens
/// shorter than two characters, all-digit tokens and stopwords. Word
/// characters are ASCII letters/digits and non-ASCII code points outside the
/// punctuation and symbol blocks (so "café" stays whole while "it’s" splits
/// on the curly apostrophe). Case folding covers ASCII and Latin-1.
class Tokenizer {
 public:
  Tokenizer() : Tokenizer(Stopwords::english_v1()) {}
  explicit Tokenizer(Stopwords stopwords)
      : stopwords_(std::make_shared<const Stopwords>(std::move(stopwords))) {}

  std::vector<std::string> operator()(std::string_view text) const;
  const Stopwords& stopwords() const noexcept { return *stopwords_; }

 private:
  std::shared_ptr<const Stopwords> stopwords_;
};

}  // namespace hot
