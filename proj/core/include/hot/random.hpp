#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hot/hypergraph.hpp"

namespace hot {

/// Seeded generator with platform-independent output.
///
/// std::mt19937_64's sequence is fixed by the standard, but the standard
/// distributions are not, so bounded integers and reals are derived here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// k distinct values from [0, n), sorted ascending.
  std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k);

 private:
  std::mt19937_64 engine_;
};

struct RandomHotOptions {
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 10;
};

/// Random baseline over the nodes of `nodes_from` (texts kept): `edge_count`
/// hyperedges with sizes uniform in [min, max] (capped at the node count)
/// and members drawn uniformly without replacement. Edge i has id and label
/// "random-<i>" with i zero-padded to the width of edge_count - 1.
Hypergraph random_hot(const Hypergraph& nodes_from, std::size_t edge_count, std::uint64_t seed,
                      const RandomHotOptions& options = {});
/// Same, over bare ids (node texts empty).
Hypergraph random_hot(std::span<const NodeId> node_ids, std::size_t edge_count, std::uint64_t seed,
                      const RandomHotOptions& options = {});

}  // namespace hot
