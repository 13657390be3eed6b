#ifndef HYPERSIMP_SIMPLIFY_HPP_
#define HYPERSIMP_SIMPLIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/decomposition.hpp"
#include "hypersimp/forbidden.hpp"
#include "hypersimp/hypergraph.hpp"
#include "hypersimp/planarity.hpp"

namespace hypersimp {

enum class OpKind { MinimalCycleCollapse, CycleEdgeCut, LeafPrune };

std::string_view to_string(OpKind k);
std::optional<OpKind> parse_op_kind(std::string_view name);
/// Tie-break rank: collapse < cut < prune.
int kind_rank(OpKind k);

/// Cycle given by bipartite node ids in cycle order.
using IdCycle = std::vector<std::string>;

/// The four priority components before weighting.
struct PriorityTerms {
  double stat = 0;
  double adj = 0;
  double btw = 0;
  double topo = 0;
};

struct SimplificationOp {
  OpKind kind = OpKind::CycleEdgeCut;
  /// collapse: the merged pair (sorted); cut: (vertex, hyperedge);
  /// prune: (leaf, its neighbour).
  std::string first;
  std::string second;
  /// Target length-4 cycle of a collapse.
  IdCycle cycle;
  std::string structure;
  std::string provenance;
  PriorityTerms terms;
  double priority = 0;
  /// Queue generation the op was scored in.
  std::uint32_t epoch = 0;

  // Filled in when applied.
  std::string merged_id;
  /// Hyperedges deleted because the op emptied them.
  std::vector<std::string> cascade;
  std::int64_t predicted_b0 = 0;
  std::int64_t predicted_b1 = 0;
  Betti before;
  Betti after;
  /// The incremental basis update failed validation and was replaced.
  bool basis_recomputed = false;
};

struct CutAnnotation {
  std::string vertex;
  std::string hyperedge;
  friend bool operator==(const CutAnnotation&, const CutAnnotation&) = default;
};

struct EtaSample {
  std::string structure;
  /// Number of ops applied when the sample was taken.
  std::size_t at_op = 0;
  Rational eta;
};

struct OpLog {
  std::vector<SimplificationOp> ops;
  /// Merged id -> original ids it stands for.
  std::map<std::string, std::vector<std::string>> genealogy;
  std::vector<CutAnnotation> annotations;
  std::vector<EtaSample> eta_trace;
  std::vector<std::string> notices;
};

struct SimplifyTarget {
  bool planar = true;
  bool eta = false;
  std::optional<std::size_t> op_budget;
};

struct PriorityParams {
  double alpha = 0.0;
  double beta = 0.9;
  double gamma = 0.4;
  double delta = 1.0;
  double eta_threshold = 0.0;
  double prune_threshold = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 42;
  SimplifyTarget target;
  /// Recompute the basis from scratch after every op.
  bool full_recompute = false;
  unsigned jobs = 1;
  std::size_t crossing_permutations = 10;

  /// Throws std::invalid_argument on negative weights or no target.
  void validate() const;
};

double priority(const PriorityTerms& t, const PriorityParams& p);

struct SimplifyResult;

/// Working copy of a hypergraph plus everything the operations need. The
/// decomposition, forbidden records and candidate generators reflect the
/// last refresh(); the basis is kept current across ops.
class SimplificationState {
 public:
  explicit SimplificationState(Hypergraph h, PriorityParams params = {});

  const Hypergraph& hypergraph() const { return h_; }
  const BipartiteGraph& graph() const { return g_; }
  const TopologicalDecomposition& decomposition() const { return decomp_; }
  const std::vector<BlockForbidden>& forbidden() const { return forbidden_; }
  const std::vector<IdCycle>& basis() const { return basis_; }
  const PriorityParams& params() const { return params_; }
  const OpLog& log() const { return log_; }
  OpLog take_log() { return std::move(log_); }

  /// Rebuilds decomposition, basis and forbidden records from scratch.
  void refresh();

  /// Two candidates per member cycle of every record of block `b`; a cycle
  /// shared by several records is listed once.
  std::vector<SimplificationOp> candidate_collapses(std::uint32_t b) const;
  /// Two candidates per crossing of the contracted block, mapped back to
  /// bipartite edges and deduplicated by edge.
  std::vector<SimplificationOp> candidate_cuts(std::uint32_t b) const;
  std::vector<SimplificationOp> candidate_cuts(std::uint32_t b, const ContractedBlock& contracted,
                                               const std::vector<CrossingPair>& crossings) const;
  /// One candidate per non-root leaf of tree `t`. A leaf vertex whose only
  /// hyperedge has cardinality one is skipped: removing it would take the
  /// whole component with it.
  std::vector<SimplificationOp> candidate_prunes(std::uint32_t t) const;

  /// Each returns false (with a notice in the log) when the op is stale or
  /// rejected, otherwise applies it and appends it to the log.
  bool apply(SimplificationOp op);
  bool apply_collapse(SimplificationOp op);
  bool apply_cut(SimplificationOp op);
  bool apply_prune(SimplificationOp op);

  /// Current id of an id that may have been merged away.
  std::string resolve(const std::string& id) const;
  /// Set of original ids behind `id`.
  std::vector<std::string> members_of(const std::string& id) const;

  std::string block_name(std::uint32_t b) const;
  void set_block_name(std::uint32_t b, std::string name) { block_names_[b] = std::move(name); }

 private:
  friend SimplifyResult simplify(const Hypergraph& h, const PriorityParams& params);

  /// Generation-time scores, keyed by id so they survive later ops.
  struct Context {
    std::map<std::string, double> btw;
    std::map<std::string, double> pct;
    std::map<std::string, std::uint32_t> low;
    std::map<std::string, std::string> anchor;
    std::set<std::string> roots;
  };
  Context make_context(std::span<const NodeId> nodes, std::span<const EdgeId> edges) const;
  Context tree_context(std::uint32_t t) const;
  std::optional<SimplificationOp> prune_op(const std::string& leaf, const Context& ctx,
                                           const std::string& structure) const;
  void score(SimplificationOp& op, const Context& ctx, double adj_max) const;
  double adjacency_raw(const SimplificationOp& op) const;
  void rebuild_graph();
  void recompute_basis();
  bool basis_valid() const;
  void notice(std::string text);

  Hypergraph h_;
  PriorityParams params_;
  BipartiteGraph g_;
  TopologicalDecomposition decomp_;
  std::vector<BlockForbidden> forbidden_;
  std::vector<IdCycle> basis_;
  OpLog log_;
  std::map<std::string, std::string> renamed_;
  std::map<std::uint32_t, std::string> block_names_;
};

struct SimplifyResult {
  Hypergraph hypergraph;
  OpLog log;
};

/// Full pipeline: blocks in decreasing entanglement, collapse rounds while
/// forbidden records remain, cut rounds while the block is non-planar, then
/// leaf pruning of the trees down to `prune_threshold`.
SimplifyResult simplify(const Hypergraph& h, const PriorityParams& params = {});

/// Re-applies a log's ops to the original input.
Hypergraph replay(const Hypergraph& h, const OpLog& log);

}  // namespace hypersimp

#endif  // HYPERSIMP_SIMPLIFY_HPP_
