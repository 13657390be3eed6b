#ifndef HYPERSIMP_CYCLE_BASIS_HPP_
#define HYPERSIMP_CYCLE_BASIS_HPP_

#include <span>
#include <vector>

#include "hypersimp/graph.hpp"

namespace hypersimp {

/// Simple closed walk. edges[i] joins nodes[i] and nodes[(i + 1) % size].
struct Cycle {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  /// Length-4 cycles are the minimal cycles of a bipartite graph.
  bool minimal() const { return edges.size() == 4; }
  bool contains_node(NodeId x) const;
  bool contains_edge(EdgeId e) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Orders an edge set into a cycle. Throws std::invalid_argument if the
/// edges do not form a single simple cycle.
Cycle cycle_from_edges(const Multigraph& g, std::span<const EdgeId> edges);

/// Renumbers a cycle through subgraph-to-parent maps.
Cycle lift_cycle(const Cycle& c, std::span<const NodeId> node_map, std::span<const EdgeId> edge_map);

/// Every pair of cycle nodes is joined by a shortest path of g that is an
/// arc of the cycle.
bool is_tight(const Multigraph& g, const Cycle& c);

struct BasisOptions {
  /// Repair cycles that the nested search left non-tight.
  bool tighten = true;
  /// Exchange long basis cycles for independent length-4 cycles until the
  /// basis spans every length-4 cycle. Only meaningful on simple graphs.
  bool saturate_minimal = true;
};

/// The nested-BFS construction on a connected graph, starting from node 0.
/// Returns 1 + |E| - |V| cycles; the raw output can miss tightness on a few
/// inputs, which tight_cycle_basis repairs.
std::vector<Cycle> nested_bfs_cycles(const Multigraph& g);

/// GF(2)-independent basis of tight cycles of a connected graph.
std::vector<Cycle> tight_cycle_basis(const Multigraph& g, const BasisOptions& options = {});

/// All length-4 cycles of a simple bipartite graph, sorted by
/// (first pair node, second pair node, middle nodes).
std::vector<Cycle> length4_cycles(const Multigraph& g);

/// GF(2) rank of a list of edge sets over `edge_count` edges.
std::size_t cycle_rank(std::span<const Cycle> cycles, std::size_t edge_count);

}  // namespace hypersimp

#endif  // HYPERSIMP_CYCLE_BASIS_HPP_
