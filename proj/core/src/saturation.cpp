#include "hot/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hot/hash.hpp"
#include "hot/errors.hpp"
#include "hot/random.hpp"

namespace hot {

namespace {

SaturationStep measure(const Hypergraph& hot, const SetFamily& relevance, const SetFamily& random_sets,
                       std::size_t n) {
  const auto report = effort_ratio(hot, relevance, random_sets);
  SaturationStep s;
  s.n = n;
  s.edge_count = hot.edge_count();
  s.drel = report.drel();
  s.drand = report.drand();
  s.er = report.effort_ratio;
  s.sigma_rel = report.sigma_rel;
  s.sigma_rand = report.sigma_rand;
  s.rdp = report.rdp;
  return s;
}

class AlignedEdgeSampler {
 public:
  AlignedEdgeSampler(std::size_t node_count, const SetFamily& relevance, const SaturationSimOptions& options)
      : node_count_(node_count), relevant_(relevance), pairs_(relevant_.list()), partners_(node_count),
        options_(options) {
    for (const auto& [a, b] : pairs_) {
      partners_[a].push_back(b);
      partners_[b].push_back(a);
    }
  }

  std::vector<NodeIndex> draw(Rng& rng) {
    const auto hi = std::min(options_.max_edge_size, node_count_);
    const auto lo = std::min(options_.min_edge_size, hi);
    auto size = static_cast<std::size_t>(rng.between(lo, hi));
    for (;;) {
      for (std::size_t attempt = 0; attempt < options_.max_attempts; ++attempt) {
        auto members = grow(rng, size);
        const auto fraction = relevant_fraction(members, relevant_);
        if (fraction && *fraction >= options_.alpha) {
          std::sort(members.begin(), members.end());
          return members;
        }
      }
      // A relevant pair alone always passes, so shrinking terminates.
      if (size > 2) --size;
    }
  }

 private:
  std::vector<NodeIndex> grow(Rng& rng, std::size_t size) {
    std::vector<NodeIndex> members;
    std::vector<char> in(node_count_, 0);
    auto add = [&](NodeIndex v) {
      in[v] = 1;
      members.push_back(v);
    };
    if (pairs_.empty()) {
      for (auto v : rng.sample(static_cast<std::uint32_t>(node_count_), 2)) add(v);
    } else {
      const auto& [a, b] = pairs_[rng.below(pairs_.size())];
      add(a);
      add(b);
    }
    const auto total_pairs = size * (size - 1) / 2;
    const auto need = static_cast<std::size_t>(std::ceil(options_.alpha * static_cast<double>(total_pairs) - 1e-9));
    std::size_t have = pairs_.empty() ? 0 : 1;
    while (members.size() < size) {
      std::optional<NodeIndex> next;
      if (have < need) {
        std::vector<NodeIndex> candidates;
        for (NodeIndex m : members)
          for (NodeIndex p : partners_[m])
            if (!in[p]) candidates.push_back(p);
        if (!candidates.empty()) next = candidates[rng.below(candidates.size())];
      }
      if (!next) {
        std::vector<NodeIndex> rest;
        for (NodeIndex v = 0; v < node_count_; ++v)
          if (!in[v]) rest.push_back(v);
        next = rest[rng.below(rest.size())];
      }
      for (NodeIndex m : members)
        if (relevant_.contains(m, *next)) ++have;
      add(*next);
    }
    return members;
  }

  std::size_t node_count_;
  RelevantPairs relevant_;
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs_;
  std::vector<std::vector<NodeIndex>> partners_;
  SaturationSimOptions options_;
};

}  // namespace

SaturationTrajectory saturation_sim(const Hypergraph& h0, const SetFamily& relevance,
                                    const SaturationSimOptions& options) {
  if (!(options.alpha >= 0.0 && options.alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (options.min_edge_size < 2 || options.max_edge_size < options.min_edge_size)
    throw ConfigError("edge sizes must satisfy 2 <= min <= max");
  if (options.max_attempts < 1) throw ConfigError("max_attempts must be at least 1");
  if (h0.node_count() < 2) throw ConfigError("simulation needs at least two nodes");
  const RelevantPairs relevant(relevance);
  if (options.alpha > 0.0 && relevant.size() == 0)
    throw ConfigError("no relevant pairs exist, so no hyperedge can be alpha-aligned for alpha > 0");

  SaturationTrajectory out;
  out.random_sets = make_random_sets(h0.node_count(), relevance, options.seed).sets;
  Rng rng(derive_seed(options.seed, "saturation-edges"));
  AlignedEdgeSampler sampler(h0.node_count(), relevance, options);

  Hypergraph current = h0;
  out.steps.reserve(options.steps + 1);
  out.steps.push_back(measure(current, relevance, out.random_sets, 0));
  for (std::size_t n = 1; n <= options.steps; ++n) {
    const auto members = sampler.draw(rng);
    std::vector<NodeId> ids;
    ids.reserve(members.size());
    for (NodeIndex m : members) ids.push_back(current.node(m).id);
    HypergraphBuilder builder(current);
    const std::string name = "sim-" + std::to_string(n);
    builder.add_hyperedge(HyperedgeId(name), name, std::move(ids));
    current = builder.build();
    out.steps.push_back(measure(current, relevance, out.random_sets, n));
  }
  out.final_hot = std::move(current);
  return out;
}

}  // namespace hot
