#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hot/hypergraph.hpp"

namespace hot {

/// Family of node sets resolved against one hypergraph.
using SetFamily = std::vector<std::vector<NodeIndex>>;

/// Relevance family R: sets of mutually relevant documents, each of size
/// at least two. A document may appear in several sets.
///
/// File format (UTF-8 JSON): { "sets": [[node ids]] }.
struct RelevanceSets {
  std::vector<std::vector<NodeId>> sets;

  /// Throws ParseError for malformed JSON or sets with fewer than two
  /// distinct ids (the message names the set index).
  static RelevanceSets parse(std::string_view json_text);
  static RelevanceSets load(const std::filesystem::path& path);
  std::string to_json() const;

  /// Maps ids to node indices; duplicates inside a set collapse. Throws
  /// ValidationError listing every unknown id (sorted, unique).
  SetFamily resolve(const Hypergraph& hot) const;
};

/// Random family R': same number of sets and identical size multiset as the
/// relevance family, each set drawn uniformly without replacement.
struct RandomSets {
  SetFamily sets;
  std::uint64_t seed = 0;
  std::vector<std::size_t> size_profile;  // sizes in generation order
};

RandomSets make_random_sets(std::size_t node_count, const SetFamily& like, std::uint64_t seed);

/// Pair counts and the per-set mean distance over one set family.
struct SetDistanceSummary {
  std::optional<double> value;  // mean of per-set means; nullopt when undefined
  std::string reason;           // why value is undefined
  std::size_t set_count = 0;
  std::size_t contributing_sets = 0;  // sets with at least one connected pair
  std::size_t skipped_sets = 0;       // sets whose pairs are all disconnected
  std::size_t ordered_pairs = 0;      // sum of |r|(|r|-1)
  std::size_t connected_pairs = 0;
  std::size_t excluded_pairs = 0;     // disconnected, left out of the mean
  std::size_t one_hop_pairs = 0;
};

/// Core of DRel/DRand. For each set, the mean hop distance over its ordered
/// pairs i != j that are connected; the result averages those means over the
/// sets having at least one connected pair. Disconnected pairs are counted in
/// excluded_pairs instead. `distances` must have every set member as a source.
SetDistanceSummary mean_set_distance(const DistanceMatrix& distances, const SetFamily& family);

/// DRel over the relevance family (runs the BFS itself).
SetDistanceSummary drel(const Hypergraph& hot, const SetFamily& relevance);
/// DRand over a random family; the same computation as drel.
SetDistanceSummary drand(const Hypergraph& hot, const SetFamily& random_sets);

struct Saturation {
  double relevant = 0.0;  // sigma_rel
  double random = 0.0;    // sigma_rand
};

/// Fraction of ordered pairs at distance exactly one; disconnected pairs stay
/// in the denominator. A family without pairs scores 0.
Saturation saturation(const Hypergraph& hot, const SetFamily& relevance, const SetFamily& random_sets);

struct EvalReport {
  std::string label;
  std::size_t node_count = 0;
  std::size_t hyperedge_count = 0;
  std::uint64_t seed = 0;

  SetDistanceSummary relevant;  // DRel and relevant pair counts
  SetDistanceSummary random;    // DRand and random pair counts

  std::optional<double> effort_ratio;
  std::string effort_ratio_reason;  // set when effort_ratio is undefined
  std::optional<double> rdp;        // disconnected / all relevant ordered pairs
  std::optional<double> random_disconnect_proportion;
  double sigma_rel = 0.0;
  double sigma_rand = 0.0;

  std::optional<double> drel() const { return relevant.value; }
  std::optional<double> drand() const { return random.value; }
};

/// Full metric suite for explicit R and R'. `seed` is recorded only.
EvalReport effort_ratio(const Hypergraph& hot, const SetFamily& relevance, const SetFamily& random_sets,
                        std::uint64_t seed = 0);

/// Draws R' from `seed` (make_random_sets) and runs effort_ratio.
EvalReport evaluate(const Hypergraph& hot, const SetFamily& relevance, std::uint64_t seed);

/// Unordered pairs that share at least one relevance set.
class RelevantPairs {
 public:
  explicit RelevantPairs(const SetFamily& relevance);
  bool contains(NodeIndex a, NodeIndex b) const;
  std::size_t size() const noexcept { return pairs_.size(); }
  /// Every relevant pair as (low, high), ascending.
  std::vector<std::pair<NodeIndex, NodeIndex>> list() const;

 private:
  static std::uint64_t key(NodeIndex a, NodeIndex b);
  std::unordered_set<std::uint64_t> pairs_;
};

struct EdgeAlignment {
  EdgeIndex edge = 0;
  std::size_t pair_count = 0;      // C(|e|, 2)
  std::size_t relevant_pairs = 0;
  std::optional<double> fraction;  // nullopt for edges with fewer than two members
  bool alpha_aligned = false;      // fraction >= alpha
  bool beta_non_aligned = false;   // fraction < beta
};

struct AlignmentReport {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<EdgeAlignment> edges;  // one per hyperedge, in edge order
};

/// Relevant-pair fraction of every hyperedge and its alpha/beta flags.
/// alpha and beta are independent thresholds in [0, 1].
AlignmentReport classify_alignment(const Hypergraph& hot, const SetFamily& relevance, double alpha, double beta);
/// Fraction for an arbitrary member set (sorted or not); nullopt below two members.
std::optional<double> relevant_fraction(std::span<const NodeIndex> members, const RelevantPairs& relevant);

}  // namespace hot
