#include "hot/hypergraph.hpp"

#include <algorithm>
#include <deque>

#include "hot/errors.hpp"
#include "parallel.hpp"

namespace hot {

Hypergraph::Hypergraph(std::vector<Node> nodes, std::vector<Hyperedge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  node_lookup_.reserve(nodes_.size());
  for (NodeIndex i = 0; i < nodes_.size(); ++i) node_lookup_.emplace(nodes_[i].id, i);
  edge_lookup_.reserve(edges_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) edge_lookup_.emplace(edges_[e].id, e);

  // CSR incidence: node -> edges, edges ascending within each node.
  std::vector<std::size_t> degree(nodes_.size(), 0);
  for (const auto& e : edges_)
    for (NodeIndex v : e.members) ++degree[v];
  incidence_offsets_.assign(nodes_.size() + 1, 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    incidence_offsets_[i + 1] = incidence_offsets_[i] + degree[i];
  incidence_.resize(incidence_offsets_.back());
  std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (EdgeIndex e = 0; e < edges_.size(); ++e)
    for (NodeIndex v : edges_[e].members) incidence_[cursor[v]++] = e;
}

std::optional<NodeIndex> Hypergraph::find_node(const NodeId& id) const {
  auto it = node_lookup_.find(id);
  if (it == node_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Hypergraph::find_hyperedge(const HyperedgeId& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Hypergraph::node_index(const NodeId& id) const {
  if (auto i = find_node(id)) return *i;
  throw InputError("unknown node id '" + id.str() + "'");
}

std::span<const EdgeIndex> Hypergraph::incident_edges(NodeIndex i) const {
  if (i >= nodes_.size()) throw InputError("node index out of range");
  return std::span<const EdgeIndex>(incidence_).subspan(
      incidence_offsets_[i], incidence_offsets_[i + 1] - incidence_offsets_[i]);
}

HypergraphBuilder::HypergraphBuilder(const Hypergraph& base) {
  for (const auto& n : base.nodes()) nodes_.emplace(n.id, n.text);
  for (const auto& e : base.hyperedges()) {
    PendingEdge pending{e.label, {}};
    pending.members.reserve(e.members.size());
    for (NodeIndex m : e.members) pending.members.push_back(base.node(m).id);
    edges_.emplace(e.id, std::move(pending));
  }
}

HypergraphBuilder& HypergraphBuilder::add_node(NodeId id, std::string text) {
  if (id.empty()) throw InputError("node id must be non-empty");
  if (nodes_.contains(id)) throw InputError("duplicate node id '" + id.str() + "'");
  nodes_.emplace(std::move(id), std::move(text));
  return *this;
}

HypergraphBuilder& HypergraphBuilder::add_hyperedge(HyperedgeId id, std::string label,
                                                    std::vector<NodeId> members) {
  if (id.empty()) throw InputError("hyperedge id must be non-empty");
  if (edges_.contains(id)) throw InputError("duplicate hyperedge id '" + id.str() + "'");
  edges_.emplace(std::move(id), PendingEdge{std::move(label), std::move(members)});
  return *this;
}

Hypergraph HypergraphBuilder::build() const {
  std::vector<Node> nodes;
  nodes.reserve(nodes_.size());
  std::unordered_map<NodeId, NodeIndex> lookup;
  lookup.reserve(nodes_.size());
  for (const auto& [id, text] : nodes_) {
    lookup.emplace(id, static_cast<NodeIndex>(nodes.size()));
    nodes.push_back(Node{id, text});
  }

  std::vector<std::string> dangling;
  std::vector<Hyperedge> edges;
  edges.reserve(edges_.size());
  for (const auto& [id, pending] : edges_) {
    Hyperedge e{id, pending.label, {}};
    e.members.reserve(pending.members.size());
    for (const auto& m : pending.members) {
      auto it = lookup.find(m);
      if (it == lookup.end()) {
        dangling.push_back(m.str());
        continue;
      }
      e.members.push_back(it->second);
    }
    std::sort(e.members.begin(), e.members.end());
    e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
    edges.push_back(std::move(e));
  }
  if (!dangling.empty()) {
    std::sort(dangling.begin(), dangling.end());
    dangling.erase(std::unique(dangling.begin(), dangling.end()), dangling.end());
    std::string msg = "hyperedge members missing from nodes:";
    for (const auto& d : dangling) msg += " '" + d + "'";
    throw ValidationError(msg, std::move(dangling));
  }
  return Hypergraph(std::move(nodes), std::move(edges));
}

AdjacencyLists induced_adjacency(const Hypergraph& hot) {
  AdjacencyLists adj(hot.node_count());
  for (const auto& e : hot.hyperedges()) {
    for (NodeIndex u : e.members)
      for (NodeIndex v : e.members)
        if (u != v) adj[u].push_back(v);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

std::vector<std::int32_t> bfs_distances(const Hypergraph& hot, NodeIndex source) {
  if (source >= hot.node_count()) throw InputError("source index out of range");
  std::vector<std::int32_t> dist(hot.node_count(), kUnreachable);
  std::vector<bool> edge_seen(hot.edge_count(), false);
  std::deque<NodeIndex> frontier;
  dist[source] = 0;
  frontier.push_back(source);
  while (!frontier.empty()) {
    const NodeIndex u = frontier.front();
    frontier.pop_front();
    const std::int32_t next = dist[u] + 1;
    for (EdgeIndex e : hot.incident_edges(u)) {
      if (edge_seen[e]) continue;
      edge_seen[e] = true;
      for (NodeIndex v : hot.hyperedge(e).members) {
        if (dist[v] != kUnreachable) continue;
        dist[v] = next;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(std::size_t node_count, std::vector<NodeIndex> sources,
                               std::vector<std::vector<std::int32_t>> rows)
    : sources_(std::move(sources)), slot_(node_count, kNoSlot), rows_(std::move(rows)) {
  for (std::size_t k = 0; k < sources_.size(); ++k) slot_.at(sources_[k]) = k;
}

std::span<const std::int32_t> DistanceMatrix::row(NodeIndex s) const {
  if (!has_source(s)) throw InputError("node index " + std::to_string(s) + " is not a BFS source");
  return rows_[slot_[s]];
}

std::optional<std::uint32_t> DistanceMatrix::at(NodeIndex s, NodeIndex t) const {
  const std::int32_t d = row(s)[t];
  if (d == kUnreachable) return std::nullopt;
  return static_cast<std::uint32_t>(d);
}

DistanceMatrix shortest_distances(const Hypergraph& hot, std::span<const NodeIndex> sources,
                                  unsigned threads) {
  std::vector<NodeIndex> unique(sources.begin(), sources.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (NodeIndex s : unique)
    if (s >= hot.node_count()) throw InputError("source index out of range");
  std::vector<std::vector<std::int32_t>> rows(unique.size());
  detail::parallel_for(unique.size(), threads,
                       [&](std::size_t k) { rows[k] = bfs_distances(hot, unique[k]); });
  return DistanceMatrix(hot.node_count(), std::move(unique), std::move(rows));
}

DistanceMatrix shortest_distances(const Hypergraph& hot, std::span<const NodeId> sources,
                                  unsigned threads) {
  std::vector<NodeIndex> idx;
  idx.reserve(sources.size());
  for (const auto& id : sources) {
    auto i = hot.find_node(id);
    if (!i) throw InputError("unknown source node id '" + id.str() + "'");
    idx.push_back(*i);
  }
  return shortest_distances(hot, std::span<const NodeIndex>(idx), threads);
}

Hypergraph prune_by_size(const Hypergraph& hot, std::size_t min_size) {
  if (min_size < 1) throw InputError("min_size must be >= 1");
  std::vector<Node> nodes(hot.nodes().begin(), hot.nodes().end());
  std::vector<Hyperedge> edges;
  for (const auto& e : hot.hyperedges())
    if (e.size() >= min_size) edges.push_back(e);
  return Hypergraph(std::move(nodes), std::move(edges));
}

}  // namespace hot
