#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hot/providers.hpp"
#include "hot/topics.hpp"

namespace hot::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUserError = 1,         // invalid configuration or input
  kEnvironmentError = 2,  // provider unreachable, bind failure
};

/// Parameters of one `construct` run. Only the fields of the chosen method
/// may be set; validate() enforces this.
struct RunConfig {
  std::filesystem::path corpus;
  std::string method;  // allwords | llm | twostep | random
  std::optional<double> top_fraction;
  std::optional<TopicLevel> level;
  std::optional<std::size_t> k_sentences;
  std::optional<std::size_t> k_pairs;
  std::optional<std::size_t> prune_min_size;
  std::optional<std::size_t> edges;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> cache;

  bool mock_providers = false;
  std::optional<ProviderConfig> chat;
  std::optional<ProviderConfig> embedding;
  unsigned concurrency = 4;

  /// Throws ConfigError naming the first offending parameter.
  void validate() const;
};

struct EvaluateConfig {
  std::filesystem::path hot;
  std::filesystem::path relevance;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  std::string label;  // defaults to the HoT file stem, or its directory for hot.json
};

struct SimulateConfig {
  std::filesystem::path hot;
  std::filesystem::path relevance;
  double alpha = 1.0;
  std::size_t steps = 100;
  std::uint64_t seed = 0;
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 6;
  std::filesystem::path out;
};

struct IngestMultihopConfig {
  std::filesystem::path dir;
  std::filesystem::path out_dir;
};

/// Writes <out>/hot.json and <out>/manifest.json.
int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Writes <out>/report.json and <out>/report.txt; prints the table.
int cmd_evaluate(const EvaluateConfig& config, std::ostream& out, std::ostream& err);
/// Writes the trajectory as JSON.
int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err);
/// Writes <out>/corpus.jsonl and <out>/relevance.json.
int cmd_ingest_multihop(const IngestMultihopConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches. `serve` blocks until stopped.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hot::cli
