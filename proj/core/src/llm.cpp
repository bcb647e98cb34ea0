#include "hot/llm.hpp"

#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

#include "hot/hash.hpp"
#include "hot/errors.hpp"
#include "parallel.hpp"

namespace hot {

using nlohmann::json;

std::string UnitRef::describe() const {
  if (!sentence) return "document " + doc_id.str();
  return "document " + doc_id.str() + " sentence " + std::to_string(*sentence);
}

TopicExtraction make_extraction(UnitRef source, std::vector<std::string> topics) {
  TopicExtraction e{std::move(source), std::move(topics), {}};
  for (const auto& t : e.topics) {
    auto key = normalize_topic(t);
    if (!key.empty()) e.normalized.push_back(std::move(key));
  }
  return e;
}

ExtractionOutcome extract_topics(std::string_view unit_text, TopicLevel level, ChatProvider& provider,
                                 const UnitRef& unit) {
  if (unit_text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw InputError("cannot extract topics from empty text (" + unit.describe() + ")");
  const auto messages = topic_messages(level, unit_text);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::string answer;
    try {
      answer = provider.complete(messages);
    } catch (const ProviderError& e) {
      throw ProviderError(e.what(), unit.describe());
    }
    if (auto topics = parse_topic_list(answer)) {
      auto extraction = make_extraction(unit, std::move(*topics));
      if (!extraction.normalized.empty()) return {std::move(extraction), std::nullopt};
    }
  }
  return {make_extraction(unit, {}), "unparseable topic answer after retry for " + unit.describe()};
}

Hypergraph assemble_topic_hot(std::span<const TopicExtraction> extractions, const Corpus& corpus) {
  TopicEdgeAccumulator acc;
  for (const auto& e : extractions)
    for (const auto& t : e.topics) acc.add(t, e.source.doc_id);
  return acc.build(corpus);
}

std::string extraction_cache_line(const TopicExtraction& e, TopicLevel level, std::string_view unit_text) {
  json line{{"doc_id", e.source.doc_id.str()},
            {"level", std::string(to_string(level))},
            {"sentence", e.source.sentence ? json(*e.source.sentence) : json(nullptr)},
            {"text_hash", hex64(fnv1a64(unit_text))},
            {"topics", e.topics},
            {"normalized", e.normalized}};
  return line.dump();
}

namespace {

struct Unit {
  UnitRef ref;
  const std::string* text;
};

std::map<UnitRef, std::pair<std::string, std::vector<std::string>>> read_cache(
    const std::filesystem::path& path, TopicLevel level, std::vector<std::string>& warnings) {
  std::map<UnitRef, std::pair<std::string, std::vector<std::string>>> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded()) {
      warnings.push_back("ignoring malformed cache line " + std::to_string(line_no) + " in " + path.string());
      continue;
    }
    try {
      if (doc.at("level").get<std::string>() != to_string(level)) continue;
      UnitRef ref{NodeId(doc.at("doc_id").get<std::string>()), std::nullopt};
      if (!doc.at("sentence").is_null()) ref.sentence = doc.at("sentence").get<std::size_t>();
      out[ref] = {doc.at("text_hash").get<std::string>(), doc.at("topics").get<std::vector<std::string>>()};
    } catch (const json::exception&) {
      warnings.push_back("ignoring malformed cache line " + std::to_string(line_no) + " in " + path.string());
    }
  }
  return out;
}

}  // namespace

LlmConstructionResult construct_llm(const Corpus& corpus, ChatProvider& provider,
                                    const LlmConstructionOptions& options) {
  if (options.max_concurrency < 1) throw ConfigError("max_concurrency must be at least 1");
  LlmConstructionResult result;

  std::vector<Unit> units;
  for (const auto& doc : corpus.documents()) {
    if (options.level == TopicLevel::document) {
      units.push_back({{doc.id, std::nullopt}, &doc.text});
    } else {
      for (const auto& s : doc.sentences) units.push_back({{doc.id, s.index}, &s.text});
    }
  }

  std::map<UnitRef, std::pair<std::string, std::vector<std::string>>> cached;
  if (options.cache_path) cached = read_cache(*options.cache_path, options.level, result.warnings);

  std::vector<std::optional<ExtractionOutcome>> slots(units.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < units.size(); ++i) {
    auto it = cached.find(units[i].ref);
    if (it != cached.end() && it->second.first == hex64(fnv1a64(*units[i].text))) {
      slots[i] = ExtractionOutcome{make_extraction(units[i].ref, it->second.second), std::nullopt};
      ++result.cached_units;
    } else {
      pending.push_back(i);
    }
  }

  std::mutex cache_mutex;
  std::ofstream cache_out;
  if (options.cache_path) {
    if (options.cache_path->has_parent_path())
      std::filesystem::create_directories(options.cache_path->parent_path());
    cache_out.open(*options.cache_path, std::ios::app);
    if (!cache_out) throw InputError("cannot open cache '" + options.cache_path->string() + "'");
  }

  detail::parallel_for(pending.size(), options.max_concurrency, [&](std::size_t k) {
    const Unit& unit = units[pending[k]];
    auto outcome = extract_topics(*unit.text, options.level, provider, unit.ref);
    if (cache_out.is_open() && !outcome.warning) {
      std::lock_guard lock(cache_mutex);
      cache_out << extraction_cache_line(outcome.extraction, options.level, *unit.text) << '\n';
      cache_out.flush();
    }
    slots[pending[k]] = std::move(outcome);
  });
  result.provider_units = pending.size();

  result.extractions.reserve(units.size());
  for (auto& slot : slots) {
    if (slot->warning) result.warnings.push_back(*slot->warning);
    result.extractions.push_back(std::move(slot->extraction));
  }
  result.hot = assemble_topic_hot(result.extractions, corpus);
  return result;
}

}  // namespace hot
