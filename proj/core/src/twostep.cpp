#include "hot/twostep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include <json.hpp>

#include "hot/hash.hpp"
#include "hot/errors.hpp"
#include "hot/topics.hpp"
#include "parallel.hpp"

namespace hot {

using nlohmann::json;

std::vector<SentenceCandidate> filter_sentences(const Corpus& corpus, const TfIdfStats& stats,
                                                std::size_t k_per_doc) {
  if (k_per_doc < 1) throw InputError("k_per_doc must be at least 1");
  std::vector<SentenceCandidate> out;
  for (const auto& doc : corpus.documents()) {
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(doc.sentences.size());
    for (const auto& s : doc.sentences) scored.emplace_back(sentence_score(s, stats), s.index);
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    const std::size_t keep = std::min(k_per_doc, scored.size());
    for (std::size_t k = 0; k < keep; ++k) {
      const auto& s = doc.sentences[scored[k].second];
      out.push_back(SentenceCandidate{{doc.id, s.index}, scored[k].first, s.text, {}});
    }
  }
  return out;
}

void embed(std::span<SentenceCandidate> candidates, EmbeddingProvider& provider, const EmbedOptions& options) {
  if (options.batch_size < 1) throw ConfigError("embedding batch size must be at least 1");
  const std::size_t batches = (candidates.size() + options.batch_size - 1) / options.batch_size;
  std::vector<std::vector<std::vector<double>>> results(batches);

  detail::parallel_for(batches, options.max_concurrency, [&](std::size_t b) {
    const std::size_t begin = b * options.batch_size;
    const std::size_t end = std::min(candidates.size(), begin + options.batch_size);
    std::vector<std::string> texts;
    texts.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) texts.push_back(candidates[i].text);
    const std::string name = "embedding batch " + std::to_string(b) + " (candidates " +
                             std::to_string(begin) + ".." + std::to_string(end - 1) + ")";
    try {
      results[b] = provider.embed(texts);
    } catch (const ProviderError& e) {
      throw ProviderError(e.what(), name);
    }
    if (results[b].size() != texts.size())
      throw ProviderError("provider returned " + std::to_string(results[b].size()) + " vectors for " +
                              std::to_string(texts.size()) + " inputs",
                          name);
  });

  std::optional<std::size_t> dims;
  std::size_t i = 0;
  for (auto& batch : results) {
    for (auto& v : batch) {
      if (!dims) dims = v.size();
      if (v.size() != *dims || v.empty())
        throw ConfigError("embedding dimension mismatch: expected " + std::to_string(*dims) + ", got " +
                          std::to_string(v.size()));
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (!(norm > 0.0) || !std::isfinite(norm))
        throw ConfigError("embedding for candidate " + std::to_string(i) + " has zero or non-finite norm");
      for (double& x : v) x /= norm;
      candidates[i++].embedding = std::move(v);
    }
  }
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

std::vector<RankedPair> ExactPairRanker::rank(std::span<const SentenceCandidate> candidates) const {
  std::vector<RankedPair> pairs;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (candidates[i].ref.doc_id == candidates[j].ref.doc_id) continue;
      if (candidates[i].embedding.size() != candidates[j].embedding.size() || candidates[i].embedding.empty())
        throw ConfigError("candidates must be embedded with one dimension before ranking");
      std::size_t a = i, b = j;
      if (candidates[b].ref < candidates[a].ref) std::swap(a, b);
      pairs.push_back(RankedPair{a, b, dot(candidates[a].embedding, candidates[b].embedding)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const RankedPair& x, const RankedPair& y) {
    if (x.similarity != y.similarity) return x.similarity > y.similarity;
    const auto& xa = candidates[x.first].ref;
    const auto& ya = candidates[y.first].ref;
    if (xa != ya) return xa < ya;
    return candidates[x.second].ref < candidates[y.second].ref;
  });
  return pairs;
}

PairSelection select_pairs(std::span<const SentenceCandidate> candidates, std::size_t k_pairs,
                           const PairRanker& ranker) {
  if (candidates.size() < 2) throw InputError("pair selection needs at least two candidates");
  PairSelection out;
  if (k_pairs == 0) return out;
  const auto ranked = ranker.rank(candidates);

  std::vector<bool> taken(ranked.size(), false);
  std::vector<bool> sentence_used(candidates.size(), false);
  std::set<NodeId> docs_used;
  for (std::size_t p = 0; p < ranked.size() && out.pairs.size() < k_pairs; ++p) {
    const auto& r = ranked[p];
    if (sentence_used[r.first] || sentence_used[r.second]) continue;
    const auto& da = candidates[r.first].ref.doc_id;
    const auto& db = candidates[r.second].ref.doc_id;
    if (docs_used.contains(da) || docs_used.contains(db)) continue;
    sentence_used[r.first] = sentence_used[r.second] = true;
    docs_used.insert(da);
    docs_used.insert(db);
    taken[p] = true;
    out.pairs.push_back(SentencePair{r.first, r.second, r.similarity, true});
  }
  for (std::size_t p = 0; p < ranked.size() && out.pairs.size() < k_pairs; ++p) {
    if (taken[p]) continue;
    taken[p] = true;
    out.pairs.push_back(SentencePair{ranked[p].first, ranked[p].second, ranked[p].similarity, false});
  }
  if (out.pairs.size() < k_pairs)
    out.warnings.push_back("requested " + std::to_string(k_pairs) + " sentence pairs but only " +
                           std::to_string(out.pairs.size()) + " distinct cross-document pairs exist");
  return out;
}

namespace {

std::string pair_hash(const SentenceCandidate& a, const SentenceCandidate& b) {
  return hex64(fnv1a64(a.text + '\x1f' + b.text));
}

json ref_json(const SentenceRef& r) { return json{{"doc_id", r.doc_id.str()}, {"index", r.index}}; }

SentenceRef ref_from_json(const json& j) {
  return SentenceRef{NodeId(j.at("doc_id").get<std::string>()), j.at("index").get<std::size_t>()};
}

using PairKey = std::pair<SentenceRef, SentenceRef>;

std::map<PairKey, std::pair<std::string, std::string>> read_pair_cache(const std::filesystem::path& path,
                                                                        std::vector<std::string>& warnings) {
  std::map<PairKey, std::pair<std::string, std::string>> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc = json::parse(line, nullptr, false);
    try {
      if (doc.is_discarded()) throw std::invalid_argument("bad json");
      out[{ref_from_json(doc.at("first")), ref_from_json(doc.at("second"))}] = {
          doc.at("text_hash").get<std::string>(), doc.at("topic").get<std::string>()};
    } catch (const std::exception&) {
      warnings.push_back("ignoring malformed pair cache line " + std::to_string(line_no));
    }
  }
  return out;
}

}  // namespace

PairTopicResult extract_pair_topics(std::span<const SentencePair> pairs,
                                    std::span<const SentenceCandidate> candidates, ChatProvider& provider,
                                    const Corpus& corpus, const PairTopicOptions& options) {
  if (pairs.empty()) throw InputError("pair topic extraction needs at least one pair");
  if (options.max_concurrency < 1) throw ConfigError("max_concurrency must be at least 1");
  PairTopicResult result;

  std::map<PairKey, std::pair<std::string, std::string>> cached;
  std::ofstream cache_out;
  if (options.cache_path) {
    cached = read_pair_cache(*options.cache_path, result.warnings);
    if (options.cache_path->has_parent_path())
      std::filesystem::create_directories(options.cache_path->parent_path());
    cache_out.open(*options.cache_path, std::ios::app);
    if (!cache_out) throw InputError("cannot open cache '" + options.cache_path->string() + "'");
  }

  struct Slot {
    std::optional<std::string> topic;
    std::optional<std::string> warning;
    std::optional<ProviderError> failure;
  };
  std::vector<Slot> slots(pairs.size());
  std::mutex cache_mutex;

  detail::parallel_for(pairs.size(), options.max_concurrency, [&](std::size_t p) {
    const auto& a = candidates[pairs[p].first];
    const auto& b = candidates[pairs[p].second];
    const std::string hash = pair_hash(a, b);
    if (auto it = cached.find({a.ref, b.ref}); it != cached.end() && it->second.first == hash) {
      slots[p].topic = it->second.second;
      return;
    }
    const std::string unit = "pair " + a.ref.doc_id.str() + "#" + std::to_string(a.ref.index) + " / " +
                             b.ref.doc_id.str() + "#" + std::to_string(b.ref.index);
    const auto messages = pair_topic_messages(a.text, b.text);
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::string answer;
      try {
        answer = provider.complete(messages);
      } catch (const ProviderError& e) {
        slots[p].failure = ProviderError(e.what(), unit);
        slots[p].warning = "skipping " + unit + ": " + e.what();
        return;
      }
      if (auto topics = parse_topic_list(answer)) {
        for (const auto& t : *topics) {
          if (normalize_topic(t).empty()) continue;
          slots[p].topic = t;
          break;
        }
        if (slots[p].topic) break;
      }
    }
    if (!slots[p].topic) {
      slots[p].warning = "skipping " + unit + ": unparseable topic answer after retry";
      return;
    }
    if (cache_out.is_open()) {
      json line{{"first", ref_json(a.ref)}, {"second", ref_json(b.ref)}, {"text_hash", hash},
                {"topic", *slots[p].topic}};
      std::lock_guard lock(cache_mutex);
      cache_out << line.dump() << '\n';
      cache_out.flush();
    }
  });

  TopicEdgeAccumulator acc;
  std::size_t provider_failures = 0;
  const ProviderError* last_failure = nullptr;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto& slot = slots[p];
    if (slot.failure) {
      ++provider_failures;
      last_failure = &*slot.failure;
    }
    if (!slot.topic) {
      ++result.skipped_pairs;
      if (slot.warning) result.warnings.push_back(*slot.warning);
      continue;
    }
    const auto& a = candidates[pairs[p].first];
    const auto& b = candidates[pairs[p].second];
    acc.add(*slot.topic, a.ref.doc_id);
    acc.add(*slot.topic, b.ref.doc_id);
    result.topics.push_back(PairTopic{a.ref, b.ref, *slot.topic});
  }
  if (provider_failures == pairs.size() && last_failure != nullptr) throw *last_failure;
  result.hot = acc.build(corpus);
  return result;
}

TwoStepResult construct_twostep(const Corpus& corpus, ChatProvider& chat, EmbeddingProvider& embedder,
                                const TwoStepOptions& options) {
  if (corpus.empty()) throw InputError("two-step construction needs a non-empty corpus");
  TwoStepResult result;
  const auto stats = TfIdfStats::build(corpus);
  result.candidates = filter_sentences(corpus, stats, options.k_sentences);
  embed(result.candidates, embedder, options.embedding);

  const std::size_t k_pairs = options.k_pairs == 0 ? 10 * corpus.size() : options.k_pairs;
  auto selection = select_pairs(result.candidates, k_pairs);
  result.pairs = std::move(selection.pairs);
  result.warnings = std::move(selection.warnings);

  auto topics = extract_pair_topics(result.pairs, result.candidates, chat, corpus, options.topics);
  result.topics = std::move(topics.topics);
  result.warnings.insert(result.warnings.end(), topics.warnings.begin(), topics.warnings.end());
  result.unpruned_edge_count = topics.hot.edge_count();
  result.hot = options.prune_min_size ? prune_by_size(topics.hot, *options.prune_min_size) : std::move(topics.hot);
  return result;
}

}  // namespace hot
