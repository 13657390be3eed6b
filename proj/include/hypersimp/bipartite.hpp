#ifndef HYPERSIMP_BIPARTITE_HPP_
#define HYPERSIMP_BIPARTITE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hypersimp/graph.hpp"
#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

/// König representation of a hypergraph. Node ids are assigned in sorted
/// order over the union of vertex and hyperedge ids, so G(H) and G(H*) have
/// the same nodes and edges and differ only in the role vector.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::vector<std::string> ids, std::vector<NodeRole> roles,
                 std::vector<Endpoints> edges);

  const Multigraph& graph() const { return graph_; }
  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  const std::string& id(NodeId x) const { return ids_[x]; }
  const std::vector<std::string>& ids() const { return ids_; }
  NodeRole role(NodeId x) const { return roles_[x]; }
  const std::vector<NodeRole>& roles() const { return roles_; }
  std::optional<NodeId> find(const std::string& id) const;
  /// Edge endpoints ordered (primal, dual).
  NodeId primal_end(EdgeId e) const;
  NodeId dual_end(EdgeId e) const;
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  std::vector<NodeId> primal_nodes() const;
  std::vector<NodeId> dual_nodes() const;

  BipartiteGraph swapped_roles() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<NodeRole> roles_;
  Multigraph graph_;
};

/// Validates h, then builds one primal node per vertex, one dual node per
/// hyperedge and one edge per incidence. Edges are stored as (lower index,
/// higher index) and sorted, so the edge order does not depend on roles.
BipartiteGraph build_bipartite(const Hypergraph& h);

/// Inverse of build_bipartite.
Hypergraph to_hypergraph(const BipartiteGraph& g);

}  // namespace hypersimp

#endif  // HYPERSIMP_BIPARTITE_HPP_
