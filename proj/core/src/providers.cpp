#include "hot/providers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "hot/hash.hpp"
#include "hot/errors.hpp"

namespace hot {

using nlohmann::json;

void ProviderConfig::validate() const {
  if (endpoint.empty()) throw ConfigError("provider endpoint must be set");
  if (model.empty()) throw ConfigError("provider model must be set");
  if (timeout.count() <= 0) throw ConfigError("provider timeout must be positive");
  if (max_concurrency < 1) throw ConfigError("provider concurrency must be at least 1");
}

std::string encode_chat_request(std::string_view model, const std::vector<ChatMessage>& messages,
                                double temperature) {
  json msgs = json::array();
  for (const auto& m : messages) msgs.push_back(json{{"role", m.role}, {"content", m.content}});
  return json{{"model", model}, {"messages", std::move(msgs)}, {"temperature", temperature}}.dump();
}

std::string decode_chat_response(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "chat response");
  }
  try {
    return doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception&) {
    throw ParseError("missing choices[0].message.content", "chat response");
  }
}

std::string encode_embedding_request(std::string_view model, std::span<const std::string> inputs) {
  return json{{"model", model}, {"inputs", std::vector<std::string>(inputs.begin(), inputs.end())}}.dump();
}

std::vector<std::vector<double>> decode_embedding_response(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "embedding response");
  }
  try {
    return doc.at("vectors").get<std::vector<std::vector<double>>>();
  } catch (const json::exception&) {
    throw ParseError("expected { \"vectors\": [[number]] }", "embedding response");
  }
}

namespace {

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Url split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint '" + url + "' lacks a scheme");
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw ConfigError("unsupported scheme in '" + url + "'");
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw ConfigError("https endpoints need a build with OpenSSL");
#endif
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

httplib::Headers auth_headers(const ProviderConfig& config) {
  httplib::Headers headers;
  if (config.credential_env.empty()) return headers;
  const char* token = std::getenv(config.credential_env.c_str());
  if (token == nullptr || *token == '\0')
    throw ConfigError("environment variable " + config.credential_env + " is not set");
  headers.emplace("Authorization", std::string("Bearer ") + token);
  return headers;
}

// POSTs `body`, retrying transport failures, 429 and 5xx. Returns the body of
// the first 2xx response.
std::string post_json(const ProviderConfig& config, const std::string& body, const std::string& unit) {
  const Url url = split_url(config.endpoint);
  const auto headers = auth_headers(config);
  std::string last_error;
  for (unsigned attempt = 0; attempt <= config.retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(100) * (1 << (attempt - 1)));
    httplib::Client client(url.origin);
    client.set_connection_timeout(config.timeout);
    client.set_read_timeout(config.timeout);
    client.set_write_timeout(config.timeout);
    auto res = client.Post(url.path, headers, body, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 200 && res->status < 300) return res->body;
    last_error = "HTTP " + std::to_string(res->status);
    if (res->status != 429 && res->status < 500) break;
  }
  throw ProviderError(config.endpoint + ": " + last_error, unit);
}

}  // namespace

HttpChatProvider::HttpChatProvider(ProviderConfig config) : config_(std::move(config)) {
  config_.validate();
  split_url(config_.endpoint);
}

std::string HttpChatProvider::complete(const std::vector<ChatMessage>& messages) {
  const std::string body = post_json(
      config_, encode_chat_request(config_.model, messages, config_.temperature), "chat request");
  try {
    return decode_chat_response(body);
  } catch (const ParseError& e) {
    // A malformed envelope is returned as empty content; callers treat it as
    // an unparseable answer and retry at their level.
    return {};
  }
}

HttpEmbeddingProvider::HttpEmbeddingProvider(ProviderConfig config) : config_(std::move(config)) {
  config_.validate();
  split_url(config_.endpoint);
}

std::vector<std::vector<double>> HttpEmbeddingProvider::embed(std::span<const std::string> inputs) {
  const std::string body =
      post_json(config_, encode_embedding_request(config_.model, inputs), "embedding batch");
  auto vectors = decode_embedding_response(body);
  if (vectors.size() != inputs.size())
    throw ProviderError("embedding response has " + std::to_string(vectors.size()) + " vectors for " +
                            std::to_string(inputs.size()) + " inputs",
                        "embedding batch");
  return vectors;
}

TfIdfMockChatProvider::TfIdfMockChatProvider(const TfIdfStats& stats, Tokenizer tokenizer)
    : stats_(stats), tokenizer_(std::move(tokenizer)) {}

std::vector<std::pair<std::string, double>> TfIdfMockChatProvider::ranked_terms(std::string_view text) const {
  std::map<std::string, std::uint32_t> counts;
  for (auto& tok : tokenizer_(text)) ++counts[std::move(tok)];
  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [term, count] : counts) {
    const auto t = stats_.find_term(term);
    ranked.emplace_back(term, t ? count * stats_.idf(*t) : 0.0);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

std::string TfIdfMockChatProvider::complete(const std::vector<ChatMessage>& messages) {
  std::string_view user;
  for (const auto& m : messages)
    if (m.role == "user") user = m.content;

  constexpr std::string_view kFirst = "Sentence 1: ";
  constexpr std::string_view kSecond = "\nSentence 2: ";
  json answer = json::array();
  if (user.starts_with(kFirst) && user.find(kSecond) != std::string_view::npos) {
    const auto split = user.find(kSecond);
    const auto a = user.substr(kFirst.size(), split - kFirst.size());
    const auto b = user.substr(split + kSecond.size());
    const auto in_b = ranked_terms(b);
    std::map<std::string, double> b_scores(in_b.begin(), in_b.end());
    std::vector<std::pair<std::string, double>> shared;
    for (const auto& [term, score] : ranked_terms(a))
      if (auto it = b_scores.find(term); it != b_scores.end()) shared.emplace_back(term, score + it->second);
    std::stable_sort(shared.begin(), shared.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    if (!shared.empty()) {
      answer.push_back(shared.front().first);
    } else {
      auto all = ranked_terms(std::string(a) + " " + std::string(b));
      if (!all.empty()) answer.push_back(all.front().first);
    }
  } else {
    // Shared terms first, so that topics recur across documents.
    auto ranked = ranked_terms(user);
    std::stable_partition(ranked.begin(), ranked.end(), [&](const auto& r) {
      const auto t = stats_.find_term(r.first);
      return t && stats_.df(*t) >= 2;
    });
    for (std::size_t i = 0; i < ranked.size() && i < 2; ++i) answer.push_back(ranked[i].first);
  }
  return answer.dump();
}

HashEmbeddingProvider::HashEmbeddingProvider(std::size_t dims, std::uint64_t seed, Tokenizer tokenizer)
    : dims_(dims), seed_(seed), tokenizer_(std::move(tokenizer)) {
  if (dims_ == 0) throw ConfigError("embedding dimension must be positive");
}

std::string HashEmbeddingProvider::model() const {
  return "mock-hash-" + std::to_string(dims_) + "-seed-" + std::to_string(seed_);
}

std::vector<std::vector<double>> HashEmbeddingProvider::embed(std::span<const std::string> inputs) {
  std::vector<std::vector<double>> out;
  out.reserve(inputs.size());
  for (const auto& text : inputs) {
    auto features = tokenizer_(text);
    if (features.empty()) features.push_back(fold_case(text));
    std::vector<double> v(dims_, 0.0);
    for (const auto& f : features) {
      const std::uint64_t base = splitmix64(fnv1a64(f) ^ splitmix64(seed_));
      for (std::size_t d = 0; d < dims_; ++d) {
        const std::uint64_t bits = splitmix64(base + d);
        v[d] += static_cast<double>(bits >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hot
