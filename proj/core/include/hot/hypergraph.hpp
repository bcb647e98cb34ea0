#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hot/ids.hpp"

namespace hot {

struct Node {
  NodeId id;
  std::string text;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Hyperedge {
  HyperedgeId id;
  std::string label;
  std::vector<NodeIndex> members;  // sorted, unique

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Hypergraph of Text: documents as nodes, textual hyperedges over them.
///
/// Immutable once built. Nodes and hyperedges are stored sorted by id, so a
/// NodeIndex/EdgeIndex is stable for a given content and two graphs with the
/// same content compare equal. Node-to-edge incidence is precomputed for
/// traversal. Safe for concurrent reads.
class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t total_membership() const noexcept { return incidence_.size(); }

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const Hyperedge> hyperedges() const noexcept { return edges_; }
  const Node& node(NodeIndex i) const { return nodes_.at(i); }
  const Hyperedge& hyperedge(EdgeIndex i) const { return edges_.at(i); }

  std::optional<NodeIndex> find_node(const NodeId& id) const;
  std::optional<EdgeIndex> find_hyperedge(const HyperedgeId& id) const;
  /// Throws InputError naming the id when absent.
  NodeIndex node_index(const NodeId& id) const;

  /// Hyperedges containing node `i`, ascending.
  std::span<const EdgeIndex> incident_edges(NodeIndex i) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  friend class HypergraphBuilder;
  friend Hypergraph prune_by_size(const Hypergraph&, std::size_t);

  Hypergraph(std::vector<Node> nodes, std::vector<Hyperedge> edges);

  std::vector<Node> nodes_;
  std::vector<Hyperedge> edges_;
  std::unordered_map<NodeId, NodeIndex> node_lookup_;
  std::unordered_map<HyperedgeId, EdgeIndex> edge_lookup_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<EdgeIndex> incidence_;
};

/// Accumulates nodes and hyperedges, then validates them into a Hypergraph.
///
/// Duplicate ids and empty ids are rejected immediately with InputError.
/// Repeated members inside one hyperedge collapse (set semantics). build()
/// reports every dangling member at once as a ValidationError.
class HypergraphBuilder {
 public:
  HypergraphBuilder() = default;
  /// Seeds the builder with all nodes and hyperedges of `base`.
  explicit HypergraphBuilder(const Hypergraph& base);

  HypergraphBuilder& add_node(NodeId id, std::string text);
  HypergraphBuilder& add_hyperedge(HyperedgeId id, std::string label, std::vector<NodeId> members);

  bool has_node(const NodeId& id) const { return nodes_.contains(id); }
  bool has_hyperedge(const HyperedgeId& id) const { return edges_.contains(id); }

  Hypergraph build() const;

 private:
  struct PendingEdge {
    std::string label;
    std::vector<NodeId> members;
  };
  std::map<NodeId, std::string> nodes_;
  std::map<HyperedgeId, PendingEdge> edges_;
};

/// Induced graph: u ~ v iff some hyperedge contains both. Sorted neighbor
/// lists indexed by NodeIndex; no self loops.
using AdjacencyLists = std::vector<std::vector<NodeIndex>>;
AdjacencyLists induced_adjacency(const Hypergraph& hot);

inline constexpr std::int32_t kUnreachable = -1;

/// Hop distances from `source` to every node; kUnreachable outside its
/// component. Expands node -> hyperedge -> node, each hyperedge visited once,
/// so the cost is linear in total membership.
std::vector<std::int32_t> bfs_distances(const Hypergraph& hot, NodeIndex source);

/// Rows of hop distances for a set of source nodes.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t node_count, std::vector<NodeIndex> sources,
                 std::vector<std::vector<std::int32_t>> rows);

  std::span<const NodeIndex> sources() const noexcept { return sources_; }
  bool has_source(NodeIndex s) const noexcept {
    return s < slot_.size() && slot_[s] != kNoSlot;
  }
  /// Full row for a source; throws InputError if `s` was not a source.
  std::span<const std::int32_t> row(NodeIndex s) const;
  /// nullopt when unreachable.
  std::optional<std::uint32_t> at(NodeIndex s, NodeIndex t) const;

 private:
  static constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);
  std::vector<NodeIndex> sources_;
  std::vector<std::size_t> slot_;
  std::vector<std::vector<std::int32_t>> rows_;
};

/// One BFS per distinct source; runs sources on up to `threads` workers
/// (0 = hardware concurrency).
DistanceMatrix shortest_distances(const Hypergraph& hot, std::span<const NodeIndex> sources,
                                  unsigned threads = 0);
/// Id-based overload; unknown ids raise InputError naming the id.
DistanceMatrix shortest_distances(const Hypergraph& hot, std::span<const NodeId> sources,
                                  unsigned threads = 0);

/// Keeps hyperedges with at least `min_size` members. Nodes are untouched.
Hypergraph prune_by_size(const Hypergraph& hot, std::size_t min_size);

}  // namespace hot
