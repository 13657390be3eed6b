#ifndef HYPERSIMP_FORBIDDEN_HPP_
#define HYPERSIMP_FORBIDDEN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/cycle_basis.hpp"
#include "hypersimp/decomposition.hpp"

namespace hypersimp {

/// Multigraph over basis cycles with one edge per shared bipartite edge.
struct CycleAdjacencyGraph {
  /// Node i of `graph` stands for basis[cycles[i]].
  std::vector<std::size_t> cycles;
  Multigraph graph;
  /// The bipartite edge behind each adjacency edge.
  std::vector<EdgeId> shared_edge;
  bool minimal_only = false;
};

CycleAdjacencyGraph cycle_adjacency_graph(std::span<const Cycle> basis, bool minimal_only);

/// A 2-connected component of A(C4) with at least two cycles.
struct ForbiddenCluster {
  std::uint32_t block = 0;
  std::vector<std::size_t> cycles;  // basis indices, sorted
  std::vector<NodeId> nodes;        // union of the member cycles, sorted
  std::vector<EdgeId> edges;
  /// Edges of the adjacency graph (in CycleAdjacencyGraph ids) in this cluster.
  std::vector<EdgeId> adjacency_edges;
};

enum class ForbiddenClass {
  NAdjacentBundleOf2,
  TwoAdjacentBundle,
  StrangledVertexCycle,
  StrangledHyperedgeCycle,
  StrangledVertexStar,
  StrangledHyperedgeStar,
};

std::string_view to_string(ForbiddenClass c);
/// Primal/dual counterpart.
ForbiddenClass dual_class(ForbiddenClass c);

struct ForbiddenRecord {
  std::uint32_t block = 0;
  std::size_t cluster = 0;
  /// Basis indices in cycle order along the tight cycle of A(C4).
  std::vector<std::size_t> cycles;
  /// Bipartite nodes common to every member cycle, sorted.
  std::vector<NodeId> shared;
  ForbiddenClass cls = ForbiddenClass::StrangledVertexCycle;
  /// Bundle size (k + 1 hyperedges or vertices) or number of star/cycle
  /// points (k).
  std::size_t order = 0;
  /// Star records carry both centres and count as both star classes.
  std::optional<NodeId> vertex_center;
  std::optional<NodeId> hyperedge_center;

  bool has_class(ForbiddenClass c) const;
};

/// Throws std::invalid_argument when `shared_roles` is empty.
ForbiddenClass classify_forbidden(std::size_t cycle_count, std::span<const NodeRole> shared_roles);

std::vector<ForbiddenCluster> forbidden_clusters(const TopologicalBlock& block);
std::vector<ForbiddenRecord> detect_forbidden(const BipartiteGraph& g, const TopologicalBlock& block,
                                              const std::vector<ForbiddenCluster>& clusters);

struct BlockForbidden {
  std::uint32_t block = 0;
  std::vector<ForbiddenCluster> clusters;
  std::vector<ForbiddenRecord> records;
};

std::vector<BlockForbidden> analyze_forbidden(const BipartiteGraph& g, const TopologicalDecomposition& d);
bool has_forbidden(const Hypergraph& h);

}  // namespace hypersimp

#endif  // HYPERSIMP_FORBIDDEN_HPP_
