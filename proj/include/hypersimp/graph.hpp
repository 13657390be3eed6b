#ifndef HYPERSIMP_GRAPH_HPP_
#define HYPERSIMP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hypersimp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Endpoints {
  NodeId a;
  NodeId b;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Undirected multigraph on dense node ids with a compressed adjacency.
/// Parallel edges are allowed, self-loops are not. Each node's incidences
/// are sorted by (neighbor, edge) so traversals are deterministic.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t node_count, std::vector<Endpoints> edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Endpoints>& edges() const { return edges_; }
  const Endpoints& endpoints(EdgeId e) const { return edges_[e]; }

  std::span<const Incidence> incident(NodeId x) const {
    return {adjacency_.data() + offsets_[x], adjacency_.data() + offsets_[x + 1]};
  }
  std::size_t degree(NodeId x) const { return offsets_[x + 1] - offsets_[x]; }
  NodeId opposite(EdgeId e, NodeId x) const {
    return edges_[e].a == x ? edges_[e].b : edges_[e].a;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<Endpoints> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
};

/// Edge-induced subgraph with local ids plus maps back to the parent graph.
struct Subgraph {
  Multigraph graph;
  std::vector<NodeId> node_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

/// Nodes are renumbered in ascending parent order; edges keep their given
/// order after sorting ascending.
Subgraph induced_by_edges(const Multigraph& g, std::vector<EdgeId> edges);

struct Components {
  std::vector<std::uint32_t> of_node;
  std::uint32_t count = 0;
};
Components connected_components(const Multigraph& g);

/// Unweighted distances from `source`; unreachable nodes get kNoNode.
std::vector<NodeId> bfs_distances(const Multigraph& g, NodeId source);

/// Shortest path from `from` to `to` as an edge list, ignoring `banned`
/// edges. Empty if unreachable or from == to.
std::vector<EdgeId> shortest_path(const Multigraph& g, NodeId from, NodeId to,
                                  std::span<const bool> banned = {});

struct Biconnected {
  /// Edge ids per block, each block listed in discovery order.
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<std::uint32_t> block_of_edge;
  std::vector<bool> articulation;
};
/// Hopcroft-Tarjan blocks on a multigraph. A pair of parallel edges forms a
/// 2-connected block of its own. Works on disconnected graphs.
Biconnected biconnected_components(const Multigraph& g);

/// Brandes betweenness centrality for nodes, unnormalized, each unordered
/// pair counted once.
std::vector<double> node_betweenness(const Multigraph& g);
/// Brandes edge betweenness, each unordered pair counted once.
std::vector<double> edge_betweenness(const Multigraph& g);

}  // namespace hypersimp

#endif  // HYPERSIMP_GRAPH_HPP_
