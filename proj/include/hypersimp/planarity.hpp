#ifndef HYPERSIMP_PLANARITY_HPP_
#define HYPERSIMP_PLANARITY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/decomposition.hpp"
#include "hypersimp/forbidden.hpp"
#include "hypersimp/graph.hpp"

namespace hypersimp {

struct PlanarityResult {
  bool planar = true;
  /// Edges of a K5 or K3,3 subdivision when not planar.
  std::vector<EdgeId> witness;
};

/// Boyer-Myrvold test. Parallel edges are reduced to one before testing.
PlanarityResult is_planar(const Multigraph& g);

bool is_zykov_planar(const Hypergraph& h);
bool is_convex_polygon_planar(const Hypergraph& h);

/// Block with every (merged) forbidden cluster replaced by one supernode.
struct ContractedBlock {
  Multigraph graph;
  /// Original bipartite node per T' node, or kNoNode for a supernode.
  std::vector<NodeId> original_node;
  /// Cluster indices behind each T' node (empty for ordinary nodes).
  std::vector<std::vector<std::size_t>> super_clusters;
  /// Lowest original bipartite edge behind each T' edge, and all of them.
  std::vector<EdgeId> edge_origin;
  std::vector<std::vector<EdgeId>> edge_members;
};

/// Clusters with overlapping node sets are merged into one supernode.
/// External edges are kept, parallel edges collapse, intra-group edges vanish.
ContractedBlock contract_clusters(const Multigraph& g, const TopologicalBlock& block,
                                  const std::vector<ForbiddenCluster>& clusters);

struct CrossingPair {
  /// T' edges; `first` is the edge that was routed across `second`.
  EdgeId first;
  EdgeId second;
  std::size_t permutation;
  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

struct CrossingOptions {
  std::uint64_t seed = 42;
  std::size_t permutations = 10;
};

/// Planarization: greedy maximal planar subgraph (edges tried in descending
/// edge-betweenness order), then the rejected edges are re-inserted one at a
/// time along shortest paths in the dual of the current embedding. The
/// insertion order is permuted `permutations` times (order 0 is the
/// betweenness order, the rest are seeded shuffles); the run with the fewest
/// crossings wins, ties going to the lower index. Empty iff `g` is planar.
std::vector<CrossingPair> find_crossings(const Multigraph& g, const CrossingOptions& options = {});

}  // namespace hypersimp

#endif  // HYPERSIMP_PLANARITY_HPP_
