#ifndef HYPERSIMP_REPORT_HPP_
#define HYPERSIMP_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/decomposition.hpp"
#include "hypersimp/forbidden.hpp"
#include "hypersimp/hypergraph.hpp"
#include "hypersimp/simplify.hpp"

namespace hypersimp {

using Json = nlohmann::ordered_json;

/// Bumped whenever a report changes shape.
inline constexpr int kReportSchemaVersion = 1;

Json decomposition_report(const BipartiteGraph& g, const TopologicalDecomposition& d);
Json forbidden_report(const BipartiteGraph& g, const TopologicalDecomposition& d,
                      const std::vector<BlockForbidden>& f);
/// Zykov and convex-polygon planarity, a Kuratowski witness when there is
/// one, and per-block crossings of the contracted block.
Json planarity_report(const Hypergraph& h, std::uint64_t seed = 42);

struct Stats {
  std::size_t vertices = 0;
  std::size_t hyperedges = 0;
  Betti betti;
  /// B1 / |V(G)| over the whole bipartite graph.
  Rational eta;
};
Stats hypergraph_stats(const Hypergraph& h);
Json stats_report(const Hypergraph& h, const TopologicalDecomposition& d);
/// Plain-text table for the terminal.
std::string stats_text(const Hypergraph& h, const TopologicalDecomposition& d);

Json oplog_to_json(const OpLog& log);
/// Inverse of oplog_to_json; throws std::runtime_error on a malformed log.
OpLog oplog_from_json(const Json& j);

}  // namespace hypersimp

#endif  // HYPERSIMP_REPORT_HPP_
