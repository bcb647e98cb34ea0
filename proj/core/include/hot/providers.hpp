#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/text.hpp"

namespace hot {

struct ChatMessage {
  std::string role;
  std::string content;
};

/// Chat-completion backend. Implementations must be safe to call from
/// several threads at once. complete() throws ProviderError when the
/// backend cannot be reached after its configured retries.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string complete(const std::vector<ChatMessage>& messages) = 0;
  virtual std::string model() const = 0;
};

/// Sentence-embedding backend; one vector per input, same order. Thread-safe.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<std::vector<double>> embed(std::span<const std::string> inputs) = 0;
  virtual std::string model() const = 0;
};

/// Where and how to reach a remote model. `endpoint` is the full URL that
/// requests are POSTed to; `credential_env` names an environment variable
/// holding a bearer token (empty: no Authorization header).
struct ProviderConfig {
  std::string endpoint;
  std::string model;
  std::string credential_env;
  std::chrono::milliseconds timeout{60'000};
  unsigned max_concurrency = 4;
  unsigned retries = 2;
  double temperature = 0.0;  // chat only

  /// Throws ConfigError on timeout <= 0, concurrency < 1, empty endpoint or model.
  void validate() const;
};

// Wire contract helpers, exposed for tests and mock servers.
//
// Chat request:  { "messages": [{"content", "role"}], "model", "temperature" }
// Chat response: { "choices": [{ "message": { "content": str } }] }
// Embedding request:  { "inputs": [str], "model" }
// Embedding response: { "vectors": [[number]] }
std::string encode_chat_request(std::string_view model, const std::vector<ChatMessage>& messages,
                                double temperature);
/// Throws ParseError when the body lacks choices[0].message.content.
std::string decode_chat_response(std::string_view body);
std::string encode_embedding_request(std::string_view model, std::span<const std::string> inputs);
/// Throws ParseError on a malformed body.
std::vector<std::vector<double>> decode_embedding_response(std::string_view body);

/// JSON-over-HTTP chat client. Transport errors, 429 and 5xx responses are
/// retried with exponential backoff; other 4xx fail immediately.
class HttpChatProvider final : public ChatProvider {
 public:
  explicit HttpChatProvider(ProviderConfig config);
  std::string complete(const std::vector<ChatMessage>& messages) override;
  std::string model() const override { return config_.model; }
  const ProviderConfig& config() const noexcept { return config_; }

 private:
  ProviderConfig config_;
};

class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingProvider(ProviderConfig config);
  std::vector<std::vector<double>> embed(std::span<const std::string> inputs) override;
  std::string model() const override { return config_.model; }
  const ProviderConfig& config() const noexcept { return config_; }

 private:
  ProviderConfig config_;
};

/// Deterministic stand-in for a chat model, answering from corpus TF-IDF.
///
/// Unit prompts get the two highest-scoring terms of the user message
/// (tf in the message times corpus idf; ties by term) among terms found in at
/// least two corpus documents, falling back to any term. Pair prompts (user
/// message "Sentence 1: ...\nSentence 2: ...") get the highest-scoring term
/// shared by both sentences, or the best term overall when none is shared.
/// Answers are JSON arrays of strings.
class TfIdfMockChatProvider final : public ChatProvider {
 public:
  TfIdfMockChatProvider(const TfIdfStats& stats, Tokenizer tokenizer);
  std::string complete(const std::vector<ChatMessage>& messages) override;
  std::string model() const override { return "mock-tfidf"; }

 private:
  std::vector<std::pair<std::string, double>> ranked_terms(std::string_view text) const;

  const TfIdfStats& stats_;
  Tokenizer tokenizer_;
};

/// Deterministic stand-in for an embedding model: each token (or the whole
/// lowercased text when it has no tokens) is hashed with the seed into a
/// pseudo-random vector in [-1, 1)^dims; a text embeds as the sum over its
/// tokens. Identical texts always get identical vectors.
class HashEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit HashEmbeddingProvider(std::size_t dims = 32, std::uint64_t seed = 0, Tokenizer tokenizer = {});
  std::vector<std::vector<double>> embed(std::span<const std::string> inputs) override;
  std::string model() const override;

 private:
  std::size_t dims_;
  std::uint64_t seed_;
  Tokenizer tokenizer_;
};

}  // namespace hot
