#include "hypersimp/forbidden.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hypersimp {

std::string_view to_string(ForbiddenClass c) {
  switch (c) {
    case ForbiddenClass::NAdjacentBundleOf2: return "NAdjacentBundleOf2";
    case ForbiddenClass::TwoAdjacentBundle: return "TwoAdjacentBundle";
    case ForbiddenClass::StrangledVertexCycle: return "StrangledVertexCycle";
    case ForbiddenClass::StrangledHyperedgeCycle: return "StrangledHyperedgeCycle";
    case ForbiddenClass::StrangledVertexStar: return "StrangledVertexStar";
    case ForbiddenClass::StrangledHyperedgeStar: return "StrangledHyperedgeStar";
  }
  return "?";
}

ForbiddenClass dual_class(ForbiddenClass c) {
  switch (c) {
    case ForbiddenClass::NAdjacentBundleOf2: return ForbiddenClass::TwoAdjacentBundle;
    case ForbiddenClass::TwoAdjacentBundle: return ForbiddenClass::NAdjacentBundleOf2;
    case ForbiddenClass::StrangledVertexCycle: return ForbiddenClass::StrangledHyperedgeCycle;
    case ForbiddenClass::StrangledHyperedgeCycle: return ForbiddenClass::StrangledVertexCycle;
    case ForbiddenClass::StrangledVertexStar: return ForbiddenClass::StrangledHyperedgeStar;
    case ForbiddenClass::StrangledHyperedgeStar: return ForbiddenClass::StrangledVertexStar;
  }
  return c;
}

bool ForbiddenRecord::has_class(ForbiddenClass c) const {
  if (c == cls) return true;
  const bool star = cls == ForbiddenClass::StrangledVertexStar || cls == ForbiddenClass::StrangledHyperedgeStar;
  return star && dual_class(cls) == c;
}

ForbiddenClass classify_forbidden(std::size_t cycle_count, std::span<const NodeRole> shared_roles) {
  if (shared_roles.empty()) throw std::invalid_argument("classify_forbidden needs a non-empty shared set");
  (void)cycle_count;
  auto primal = std::count(shared_roles.begin(), shared_roles.end(), NodeRole::Primal);
  auto dual = static_cast<std::ptrdiff_t>(shared_roles.size()) - primal;
  if (primal >= 2) return ForbiddenClass::TwoAdjacentBundle;
  if (dual >= 2) return ForbiddenClass::NAdjacentBundleOf2;
  if (primal == 1 && dual == 1) return ForbiddenClass::StrangledVertexStar;
  return primal == 1 ? ForbiddenClass::StrangledVertexCycle : ForbiddenClass::StrangledHyperedgeCycle;
}

CycleAdjacencyGraph cycle_adjacency_graph(std::span<const Cycle> basis, bool minimal_only) {
  CycleAdjacencyGraph a;
  a.minimal_only = minimal_only;
  std::vector<std::size_t> local(basis.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (minimal_only && !basis[i].minimal()) continue;
    local[i] = a.cycles.size();
    a.cycles.push_back(i);
  }
  std::map<EdgeId, std::vector<std::size_t>> holders;
  for (std::size_t i : a.cycles) {
    for (EdgeId e : basis[i].edges) holders[e].push_back(local[i]);
  }
  std::vector<Endpoints> ends;
  for (const auto& [e, hs] : holders) {
    for (std::size_t x = 0; x < hs.size(); ++x) {
      for (std::size_t y = x + 1; y < hs.size(); ++y) {
        ends.push_back({static_cast<NodeId>(hs[x]), static_cast<NodeId>(hs[y])});
        a.shared_edge.push_back(e);
      }
    }
  }
  a.graph = Multigraph(a.cycles.size(), std::move(ends));
  return a;
}

std::vector<ForbiddenCluster> forbidden_clusters(const TopologicalBlock& block) {
  auto a = cycle_adjacency_graph(block.basis, true);
  auto bc = biconnected_components(a.graph);
  std::vector<ForbiddenCluster> out;
  for (auto& edges : bc.blocks) {
    if (edges.size() < 2) continue;
    ForbiddenCluster c;
    c.block = block.id;
    for (EdgeId e : edges) {
      c.cycles.push_back(a.cycles[a.graph.endpoints(e).a]);
      c.cycles.push_back(a.cycles[a.graph.endpoints(e).b]);
    }
    std::sort(c.cycles.begin(), c.cycles.end());
    c.cycles.erase(std::unique(c.cycles.begin(), c.cycles.end()), c.cycles.end());
    for (std::size_t i : c.cycles) {
      c.nodes.insert(c.nodes.end(), block.basis[i].nodes.begin(), block.basis[i].nodes.end());
      c.edges.insert(c.edges.end(), block.basis[i].edges.begin(), block.basis[i].edges.end());
    }
    for (auto* v : {&c.nodes, &c.edges}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    std::sort(edges.begin(), edges.end());
    c.adjacency_edges = std::move(edges);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const ForbiddenCluster& l, const ForbiddenCluster& r) { return l.cycles < r.cycles; });
  return out;
}

std::vector<ForbiddenRecord> detect_forbidden(const BipartiteGraph& g, const TopologicalBlock& block,
                                              const std::vector<ForbiddenCluster>& clusters) {
  auto a = cycle_adjacency_graph(block.basis, true);
  std::vector<ForbiddenRecord> out;
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    Subgraph sub = induced_by_edges(a.graph, clusters[ci].adjacency_edges);
    auto loops = tight_cycle_basis(sub.graph, {.tighten = true, .saturate_minimal = false});
    for (const auto& f : loops) {
      ForbiddenRecord r;
      r.block = block.id;
      r.cluster = ci;
      for (NodeId x : f.nodes) r.cycles.push_back(a.cycles[sub.node_to_parent[x]]);
      std::vector<NodeId> common = block.basis[r.cycles.front()].nodes;
      std::sort(common.begin(), common.end());
      for (std::size_t k = 1; k < r.cycles.size() && !common.empty(); ++k) {
        std::vector<NodeId> next = block.basis[r.cycles[k]].nodes;
        std::sort(next.begin(), next.end());
        std::vector<NodeId> both;
        std::set_intersection(common.begin(), common.end(), next.begin(), next.end(), std::back_inserter(both));
        common = std::move(both);
      }
      if (common.empty()) continue;
      r.shared = std::move(common);
      std::vector<NodeRole> roles;
      for (NodeId x : r.shared) roles.push_back(g.role(x));
      r.cls = classify_forbidden(r.cycles.size(), roles);
      const std::size_t k = r.cycles.size();
      switch (r.cls) {
        case ForbiddenClass::NAdjacentBundleOf2:
        case ForbiddenClass::TwoAdjacentBundle:
          r.order = k + 1;
          break;
        case ForbiddenClass::StrangledVertexStar:
        case ForbiddenClass::StrangledHyperedgeStar:
          for (NodeId x : r.shared) {
            (g.role(x) == NodeRole::Primal ? r.vertex_center : r.hyperedge_center) = x;
          }
          r.order = k;
          break;
        default:
          r.order = k;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BlockForbidden> analyze_forbidden(const BipartiteGraph& g, const TopologicalDecomposition& d) {
  std::vector<BlockForbidden> out;
  for (const auto& b : d.blocks) {
    BlockForbidden f;
    f.block = b.id;
    f.clusters = forbidden_clusters(b);
    f.records = detect_forbidden(g, b, f.clusters);
    out.push_back(std::move(f));
  }
  return out;
}

bool has_forbidden(const Hypergraph& h) {
  auto g = build_bipartite(h);
  auto d = topological_decomposition(g);
  for (const auto& f : analyze_forbidden(g, d)) {
    if (!f.records.empty()) return true;
  }
  return false;
}

}  // namespace hypersimp
