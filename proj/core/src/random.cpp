#include "hot/random.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "hot/errors.hpp"
#include "hot/hash.hpp"

namespace hot {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::below needs a positive bound");
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::vector<std::uint32_t> Rng::sample(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw InputError("cannot sample " + std::to_string(k) + " of " + std::to_string(n));
  // Floyd's algorithm: k draws, no O(n) scratch.
  std::unordered_set<std::uint32_t> chosen;
  std::vector<std::uint32_t> out;
  out.reserve(k);
  for (std::uint32_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(below(std::uint64_t{j} + 1));
    const std::uint32_t pick = chosen.contains(t) ? j : t;
    chosen.insert(pick);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string padded(std::size_t i, std::size_t width) {
  std::string s = std::to_string(i);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

Hypergraph build_random(HypergraphBuilder builder, std::span<const NodeId> ids, std::size_t edge_count,
                        std::uint64_t seed, const RandomHotOptions& options) {
  if (edge_count < 1) throw InputError("random HoT needs at least one hyperedge");
  if (ids.size() < 2) throw InputError("random HoT needs at least two nodes");
  if (options.min_edge_size < 2 || options.max_edge_size < options.min_edge_size)
    throw InputError("random HoT edge sizes must satisfy 2 <= min <= max");
  const std::size_t hi = std::min(options.max_edge_size, ids.size());
  const std::size_t lo = std::min(options.min_edge_size, hi);
  const std::size_t width = std::to_string(edge_count - 1).size();

  Rng rng(derive_seed(seed, "random-hot"));
  for (std::size_t e = 0; e < edge_count; ++e) {
    const auto size = static_cast<std::uint32_t>(rng.between(lo, hi));
    std::vector<NodeId> members;
    members.reserve(size);
    for (std::uint32_t m : rng.sample(static_cast<std::uint32_t>(ids.size()), size)) members.push_back(ids[m]);
    std::string name = "random-" + padded(e, width);
    builder.add_hyperedge(HyperedgeId(name), name, std::move(members));
  }
  return builder.build();
}

}  // namespace

Hypergraph random_hot(const Hypergraph& nodes_from, std::size_t edge_count, std::uint64_t seed,
                      const RandomHotOptions& options) {
  HypergraphBuilder builder;
  std::vector<NodeId> ids;
  ids.reserve(nodes_from.node_count());
  for (const auto& n : nodes_from.nodes()) {
    builder.add_node(n.id, n.text);
    ids.push_back(n.id);
  }
  return build_random(std::move(builder), ids, edge_count, seed, options);
}

Hypergraph random_hot(std::span<const NodeId> node_ids, std::size_t edge_count, std::uint64_t seed,
                      const RandomHotOptions& options) {
  HypergraphBuilder builder;
  for (const auto& id : node_ids) builder.add_node(id, "");
  std::vector<NodeId> ids(node_ids.begin(), node_ids.end());
  std::sort(ids.begin(), ids.end());
  return build_random(std::move(builder), ids, edge_count, seed, options);
}

}  // namespace hot
