#ifndef HYPERSIMP_DECOMPOSITION_HPP_
#define HYPERSIMP_DECOMPOSITION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/cycle_basis.hpp"
#include "hypersimp/graph.hpp"

namespace hypersimp {

/// Non-negative fraction kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    return l.num * r.den <=> r.num * l.den;
  }
};

struct Block {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<NodeId> articulation;
};

/// Hopcroft-Tarjan blocks of the whole graph, in discovery order.
BlockDecomposition block_decomposition(const Multigraph& g);

struct TopologicalBlock {
  std::uint32_t id = 0;
  std::vector<NodeId> nodes;  // sorted
  std::vector<EdgeId> edges;  // sorted
  std::vector<Cycle> basis;   // in graph ids
  std::int64_t betti1 = 0;
  Rational entanglement;
};

enum class TreeKind { Bridge, Branch };

struct TreeRoot {
  NodeId node;
  /// Owning topological block; empty for the centre root of a component
  /// without cycles.
  std::optional<std::uint32_t> block;
};

struct TreeStructure {
  std::uint32_t id = 0;
  TreeKind kind = TreeKind::Branch;
  std::vector<NodeId> nodes;  // sorted
  std::vector<EdgeId> edges;  // sorted
  std::vector<TreeRoot> roots;
  /// Aligned with `nodes`: BFS depth from the nearest root, the deepest
  /// depth reached below each node, and the root the search came from. A
  /// root's low value is the largest height among the trees it roots.
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> low;
  std::vector<NodeId> anchor;

  std::uint32_t depth_of(NodeId x) const;
  std::uint32_t low_of(NodeId x) const;
  NodeId anchor_of(NodeId x) const;
  bool is_root(NodeId x) const;
};

enum class StructureKind { Block, Tree };

struct StructureRef {
  StructureKind kind;
  std::uint32_t index;
  friend bool operator==(const StructureRef&, const StructureRef&) = default;
};

struct TopologicalDecomposition {
  std::vector<TopologicalBlock> blocks;
  std::vector<TreeStructure> trees;
  std::vector<StructureRef> edge_owner;
  Components components;
};

struct DecompositionOptions {
  bool compute_basis = true;
  /// Worker threads for per-block basis extraction.
  unsigned jobs = 1;
  BasisOptions basis;
};

/// Splits the graph into topological blocks (multi-edge biconnected blocks)
/// and trees of single-edge blocks. Single-edge blocks only join through
/// nodes outside every topological block, so two trees hanging off the same
/// block node stay separate. Isolated nodes become edgeless branches
/// without roots; a component without cycles becomes one branch rooted at its
/// centre.
TopologicalDecomposition topological_decomposition(const Multigraph& g,
                                                   const DecompositionOptions& options = {});
inline TopologicalDecomposition topological_decomposition(const BipartiteGraph& g,
                                                          const DecompositionOptions& options = {}) {
  return topological_decomposition(g.graph(), options);
}

/// Basis of one topological block in graph ids.
std::vector<Cycle> block_basis(const Multigraph& g, std::span<const EdgeId> block_edges,
                               const BasisOptions& options = {});

struct Betti {
  std::int64_t b0 = 0;
  std::int64_t b1 = 0;
  friend bool operator==(const Betti&, const Betti&) = default;
};

Betti betti_numbers(const Multigraph& g);
Betti betti_numbers(const Hypergraph& h);
/// B1 / |V(T)| of a connected structure.
Rational entanglement(std::int64_t betti1, std::size_t nodes);

}  // namespace hypersimp

#endif  // HYPERSIMP_DECOMPOSITION_HPP_
