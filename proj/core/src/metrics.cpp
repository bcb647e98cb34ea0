#include "hot/metrics.hpp"

#include <algorithm>

#include <json.hpp>

#include "hot/errors.hpp"
#include "hot/hash.hpp"
#include "hot/random.hpp"
#include "hot/io.hpp"

namespace hot {

using nlohmann::json;

RelevanceSets RelevanceSets::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_column(json_text, e.byte));
  }
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_array())
    throw ParseError("expected { \"sets\": [[node ids]] }", "$");
  RelevanceSets out;
  const auto& sets = doc["sets"];
  out.sets.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string path = "$.sets[" + std::to_string(i) + "]";
    if (!sets[i].is_array()) throw ParseError("expected an array of node ids", path);
    std::vector<NodeId> ids;
    for (const auto& v : sets[i]) {
      if (!v.is_string()) throw ParseError("node ids must be strings", path);
      ids.emplace_back(v.get<std::string>());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() < 2) throw ParseError("relevance sets need at least two distinct ids", path);
    out.sets.push_back(std::move(ids));
  }
  return out;
}

RelevanceSets RelevanceSets::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::string RelevanceSets::to_json() const {
  json arr = json::array();
  for (const auto& s : sets) {
    json ids = json::array();
    for (const auto& id : s) ids.push_back(id.str());
    arr.push_back(std::move(ids));
  }
  return json{{"sets", std::move(arr)}}.dump() + "\n";
}

SetFamily RelevanceSets::resolve(const Hypergraph& hot) const {
  SetFamily out;
  out.reserve(sets.size());
  std::vector<std::string> unknown;
  for (const auto& s : sets) {
    std::vector<NodeIndex> idx;
    idx.reserve(s.size());
    for (const auto& id : s) {
      if (auto i = hot.find_node(id)) {
        idx.push_back(*i);
      } else {
        unknown.push_back(id.str());
      }
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    out.push_back(std::move(idx));
  }
  if (!unknown.empty()) {
    std::sort(unknown.begin(), unknown.end());
    unknown.erase(std::unique(unknown.begin(), unknown.end()), unknown.end());
    std::string msg = std::to_string(unknown.size()) + " relevance-set id(s) not in the hypergraph:";
    for (std::size_t i = 0; i < unknown.size() && i < 10; ++i) msg += " '" + unknown[i] + "'";
    if (unknown.size() > 10) msg += " ...";
    throw ValidationError(msg, std::move(unknown));
  }
  return out;
}

RandomSets make_random_sets(std::size_t node_count, const SetFamily& like, std::uint64_t seed) {
  RandomSets out;
  out.seed = seed;
  Rng rng(derive_seed(seed, "random-sets"));
  out.sets.reserve(like.size());
  for (const auto& s : like) {
    if (s.size() > node_count)
      throw ConfigError("cannot draw a random set of size " + std::to_string(s.size()) + " from " +
                        std::to_string(node_count) + " nodes");
    out.size_profile.push_back(s.size());
    out.sets.push_back(rng.sample(static_cast<std::uint32_t>(node_count), static_cast<std::uint32_t>(s.size())));
  }
  return out;
}

namespace {

std::vector<NodeIndex> members_of(const SetFamily& family) {
  std::vector<NodeIndex> all;
  for (const auto& s : family) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

DistanceMatrix distances_for(const Hypergraph& hot, const SetFamily& a, const SetFamily& b = {}) {
  auto sources = members_of(a);
  auto more = members_of(b);
  sources.insert(sources.end(), more.begin(), more.end());
  return shortest_distances(hot, std::span<const NodeIndex>(sources));
}

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

SetDistanceSummary mean_set_distance(const DistanceMatrix& distances, const SetFamily& family) {
  SetDistanceSummary out;
  out.set_count = family.size();
  if (family.empty()) {
    out.reason = "set family is empty";
    return out;
  }
  double sum_of_means = 0.0;
  for (const auto& set : family) {
    std::uint64_t distance_sum = 0;
    std::size_t connected = 0;
    for (NodeIndex i : set) {
      const auto row = distances.row(i);
      for (NodeIndex j : set) {
        if (i == j) continue;
        ++out.ordered_pairs;
        const std::int32_t d = row[j];
        if (d == kUnreachable) {
          ++out.excluded_pairs;
          continue;
        }
        ++connected;
        distance_sum += static_cast<std::uint64_t>(d);
        if (d == 1) ++out.one_hop_pairs;
      }
    }
    out.connected_pairs += connected;
    if (connected == 0) {
      ++out.skipped_sets;
      continue;
    }
    ++out.contributing_sets;
    sum_of_means += static_cast<double>(distance_sum) / static_cast<double>(connected);
  }
  if (out.contributing_sets == 0) {
    out.reason = out.ordered_pairs == 0 ? "set family has no pairs" : "every pair is disconnected";
    return out;
  }
  out.value = sum_of_means / static_cast<double>(out.contributing_sets);
  return out;
}

SetDistanceSummary drel(const Hypergraph& hot, const SetFamily& relevance) {
  return mean_set_distance(distances_for(hot, relevance), relevance);
}

SetDistanceSummary drand(const Hypergraph& hot, const SetFamily& random_sets) {
  return mean_set_distance(distances_for(hot, random_sets), random_sets);
}

Saturation saturation(const Hypergraph& hot, const SetFamily& relevance, const SetFamily& random_sets) {
  const auto dist = distances_for(hot, relevance, random_sets);
  const auto rel = mean_set_distance(dist, relevance);
  const auto rnd = mean_set_distance(dist, random_sets);
  return Saturation{ratio(rel.one_hop_pairs, rel.ordered_pairs).value_or(0.0),
                    ratio(rnd.one_hop_pairs, rnd.ordered_pairs).value_or(0.0)};
}

EvalReport effort_ratio(const Hypergraph& hot, const SetFamily& relevance, const SetFamily& random_sets,
                        std::uint64_t seed) {
  EvalReport r;
  r.node_count = hot.node_count();
  r.hyperedge_count = hot.edge_count();
  r.seed = seed;
  const auto dist = distances_for(hot, relevance, random_sets);
  r.relevant = mean_set_distance(dist, relevance);
  r.random = mean_set_distance(dist, random_sets);
  r.rdp = ratio(r.relevant.excluded_pairs, r.relevant.ordered_pairs);
  r.random_disconnect_proportion = ratio(r.random.excluded_pairs, r.random.ordered_pairs);
  r.sigma_rel = ratio(r.relevant.one_hop_pairs, r.relevant.ordered_pairs).value_or(0.0);
  r.sigma_rand = ratio(r.random.one_hop_pairs, r.random.ordered_pairs).value_or(0.0);
  if (!r.relevant.value) {
    r.effort_ratio_reason = "DRel undefined: " + r.relevant.reason;
  } else if (!r.random.value) {
    r.effort_ratio_reason = "DRand undefined: " + r.random.reason;
  } else {
    r.effort_ratio = *r.relevant.value / *r.random.value;
  }
  return r;
}

EvalReport evaluate(const Hypergraph& hot, const SetFamily& relevance, std::uint64_t seed) {
  const auto random_sets = make_random_sets(hot.node_count(), relevance, seed);
  return effort_ratio(hot, relevance, random_sets.sets, seed);
}

std::uint64_t RelevantPairs::key(NodeIndex a, NodeIndex b) {
  if (b < a) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

RelevantPairs::RelevantPairs(const SetFamily& relevance) {
  for (const auto& s : relevance)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (s[i] != s[j]) pairs_.insert(key(s[i], s[j]));
}

bool RelevantPairs::contains(NodeIndex a, NodeIndex b) const { return a != b && pairs_.contains(key(a, b)); }

std::vector<std::pair<NodeIndex, NodeIndex>> RelevantPairs::list() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  out.reserve(pairs_.size());
  for (std::uint64_t k : pairs_)
    out.emplace_back(static_cast<NodeIndex>(k >> 32), static_cast<NodeIndex>(k & 0xffffffffu));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> relevant_fraction(std::span<const NodeIndex> members, const RelevantPairs& relevant) {
  if (members.size() < 2) return std::nullopt;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (relevant.contains(members[i], members[j])) ++hits;
  const std::size_t pairs = members.size() * (members.size() - 1) / 2;
  return static_cast<double>(hits) / static_cast<double>(pairs);
}

AlignmentReport classify_alignment(const Hypergraph& hot, const SetFamily& relevance, double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0))
    throw InputError("alpha and beta must lie in [0, 1]");
  const RelevantPairs relevant(relevance);
  AlignmentReport out{alpha, beta, {}};
  out.edges.reserve(hot.edge_count());
  for (EdgeIndex e = 0; e < hot.edge_count(); ++e) {
    const auto& members = hot.hyperedge(e).members;
    EdgeAlignment a;
    a.edge = e;
    if (members.size() >= 2) {
      a.pair_count = members.size() * (members.size() - 1) / 2;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (relevant.contains(members[i], members[j])) ++a.relevant_pairs;
      a.fraction = static_cast<double>(a.relevant_pairs) / static_cast<double>(a.pair_count);
      a.alpha_aligned = *a.fraction >= alpha;
      a.beta_non_aligned = *a.fraction < beta;
    }
    out.edges.push_back(a);
  }
  return out;
}

}  // namespace hot
