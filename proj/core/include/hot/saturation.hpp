#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hot/hypergraph.hpp"
#include "hot/metrics.hpp"

namespace hot {

struct SaturationSimOptions {
  double alpha = 1.0;
  std::size_t steps = 100;
  std::uint64_t seed = 0;
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 6;
  /// Resample budget per edge size before the size shrinks by one.
  std::size_t max_attempts = 200;
};

struct SaturationStep {
  std::size_t n = 0;  // hyperedges added so far
  std::size_t edge_count = 0;
  std::optional<double> drel;
  std::optional<double> drand;
  std::optional<double> er;
  double sigma_rel = 0.0;
  double sigma_rand = 0.0;
  std::optional<double> rdp;
};

struct SaturationTrajectory {
  SetFamily random_sets;  // R', drawn once from the seed
  std::vector<SaturationStep> steps;  // steps + 1 entries, the first for h0
  Hypergraph final_hot;
};

/// Repeatedly adds one alpha-relevance-aligned hyperedge to `h0` and records
/// the metrics after each addition. Edge n is "sim-<n>".
///
/// An edge of size s in [min, max] is grown from a random relevant pair:
/// members are added through relevant partners until ceil(alpha * C(s, 2))
/// relevant pairs are reached, then uniformly; the draw repeats until the
/// fraction of relevant pairs is at least alpha. Throws ConfigError when
/// alpha is outside [0, 1], or alpha > 0 and R has no pair.
SaturationTrajectory saturation_sim(const Hypergraph& h0, const SetFamily& relevance,
                                    const SaturationSimOptions& options);

}  // namespace hot
