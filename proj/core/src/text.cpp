#include "hot/text.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "hot/errors.hpp"
#include "hot/io.hpp"

namespace hot {

namespace detail {
extern const char* const kStopwordsEnV1;
}

namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed; 1 for invalid sequences
  bool valid;
};

CodePoint decode_utf8(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1, true};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1, false};
  }
  if (i + len > s.size()) return {0xFFFD, 1, false};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1, false};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len, true};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_ascii_alnum(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Non-ASCII punctuation and symbol blocks treated as separators.
bool is_non_ascii_separator(char32_t c) {
  if (c >= 0x80 && c <= 0xBF) return true;  // C1 controls, Latin-1 punctuation/symbols
  if (c == 0xD7 || c == 0xF7) return true;  // multiplication, division signs
  if (c >= 0x2000 && c <= 0x2BFF) return true;  // punctuation, currency, arrows, math, symbols
  if (c >= 0x3000 && c <= 0x303F) return true;  // CJK punctuation
  if (c >= 0xFE30 && c <= 0xFE4F) return true;
  if (c >= 0xFF00 && c <= 0xFF0F) return true;
  if (c >= 0xFF1A && c <= 0xFF20) return true;
  if (c >= 0xFF3B && c <= 0xFF40) return true;
  if (c >= 0xFF5B && c <= 0xFF65) return true;
  if (c == 0xFEFF || c == 0xFFFD) return true;
  if (c >= 0x1F000 && c <= 0x1FAFF) return true;  // emoji and pictographs
  return false;
}

bool is_word_char(const CodePoint& cp) {
  if (!cp.valid) return false;
  if (cp.value < 0x80) return is_ascii_alnum(cp.value);
  return !is_non_ascii_separator(cp.value);
}

char32_t fold_case_cp(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  return c;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Closing characters that may follow a terminator and stay with its sentence.
std::size_t closing_length(std::string_view s, std::size_t i) {
  if (i >= s.size()) return 0;
  const char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (s.substr(i, 3) == "\xE2\x80\x9D" || s.substr(i, 3) == "\xE2\x80\x99") return 3;  // ” ’
  return 0;
}

bool opens_sentence(std::string_view s, std::size_t i) {
  const char c = s[i];
  if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  if (c == '"' || c == '\'') return true;
  if (s.substr(i, 3) == "\xE2\x80\x9C" || s.substr(i, 3) == "\xE2\x80\x98") return true;  // “ ‘
  const CodePoint cp = decode_utf8(s, i);
  return cp.valid && cp.value >= 0xC0 && cp.value <= 0xDE && cp.value != 0xD7;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Word ending at (and including) the period at `dot`.
std::string_view word_before(std::string_view s, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !is_space(s[b - 1])) --b;
  std::string_view w = s.substr(b, dot + 1 - b);
  while (!w.empty() && (w.front() == '"' || w.front() == '\'' || w.front() == '(' || w.front() == '['))
    w.remove_prefix(1);
  return w;
}

bool is_abbreviation(std::string_view word) {
  const auto& list = sentence_abbreviations();
  return std::find(list.begin(), list.end(), word) != list.end();
}

}  // namespace

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const CodePoint cp = decode_utf8(text, i);
    if (cp.valid) {
      append_utf8(out, fold_case_cp(cp.value));
    } else {
      out.push_back(text[i]);
    }
    i += cp.length;
  }
  return out;
}

const std::vector<std::string>& sentence_abbreviations() {
  static const std::vector<std::string> kList = {
      "Dr.",  "Mr.",  "Mrs.", "Ms.",  "Prof.", "Sr.",  "Jr.",  "St.",  "Mt.",
      "Gen.", "Gov.", "Sen.", "Rep.", "U.S.",  "U.K.", "U.N.", "e.g.", "i.e.", "vs."};
  return kList;
}

std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    auto piece = trim(text.substr(begin, end - begin));
    if (!piece.empty()) out.emplace_back(piece);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      std::size_t j = i;
      int breaks = 0;
      while (j < text.size() && is_space(text[j])) {
        if (text[j] == '\n') ++breaks;
        ++j;
      }
      if (breaks >= 2) {
        emit(start, i);
        start = j;
      }
      i = j;
      continue;
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < text.size() && is_terminator(text[end])) ++end;
    while (std::size_t n = closing_length(text, end)) end += n;
    std::size_t next = end;
    while (next < text.size() && is_space(text[next])) ++next;
    const bool boundary = next > end && next < text.size() && opens_sentence(text, next) &&
                          !(c == '.' && end == i + 1 && is_abbreviation(word_before(text, i)));
    if (boundary) {
      emit(start, end);
      start = next;
      i = next;
    } else {
      i = end;
    }
  }
  emit(start, text.size());
  return out;
}

const Stopwords& Stopwords::english_v1() {
  static const Stopwords kList = from_text(detail::kStopwordsEnV1, "en-v1");
  return kList;
}

Stopwords Stopwords::from_text(std::string_view text, std::string version) {
  Stopwords s;
  s.version_ = std::move(version);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      std::string word;
      for (std::size_t i = 0; i < line.size();) {
        const CodePoint cp = decode_utf8(line, i);
        append_utf8(word, fold_case_cp(cp.value));
        i += cp.length;
      }
      s.words_.insert(std::move(word));
    }
    pos = nl + 1;
  }
  return s;
}

Stopwords Stopwords::from_file(const std::filesystem::path& path) {
  return from_text(read_file(path), path.filename().string());
}

std::vector<std::string> Tokenizer::operator()(std::string_view text) const {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t code_points = 0;
  bool all_digits = true;

  auto flush = [&] {
    if (code_points >= 2 && !all_digits && !stopwords_->contains(current))
      tokens.push_back(current);
    current.clear();
    code_points = 0;
    all_digits = true;
  };

  for (std::size_t i = 0; i < text.size();) {
    const CodePoint cp = decode_utf8(text, i);
    i += cp.length;
    if (!is_word_char(cp)) {
      if (!current.empty()) flush();
      continue;
    }
    if (!(cp.value >= '0' && cp.value <= '9')) all_digits = false;
    append_utf8(current, fold_case_cp(cp.value));
    ++code_points;
  }
  if (!current.empty()) flush();
  return tokens;
}

}  // namespace hot
