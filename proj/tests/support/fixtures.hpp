#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hot/corpus.hpp"
#include "hot/hypergraph.hpp"
#include "hot/metrics.hpp"

namespace hot::testing {

/// Node id for index i: "n00", "n01", ...
std::string node_name(std::size_t i);

/// HoT over `n` nodes named by node_name with edges "e<k>" over the given indices.
Hypergraph make_hot(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

/// Node indices of make_hot graphs coincide with the integers used to build them.
SetFamily family(const std::vector<std::vector<std::size_t>>& sets);

/// Corpus from (id, title, text) triples.
Corpus make_corpus(const std::vector<std::vector<std::string>>& docs);

/// Small news-like corpus used across construction and pipeline tests.
std::string sample_corpus_jsonl();

/// Seeded random HoT with `n` nodes and up to `m` edges of sizes 1..max_size.
Hypergraph random_small_hot(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t max_size);
/// Seeded random family of `count` sets of size 2..max_size over n nodes.
SetFamily random_family(std::uint64_t seed, std::size_t n, std::size_t count, std::size_t max_size);

/// Fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace hot::testing
