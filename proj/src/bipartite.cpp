#include "hypersimp/bipartite.hpp"

#include <algorithm>

namespace hypersimp {

BipartiteGraph::BipartiteGraph(std::vector<std::string> ids, std::vector<NodeRole> roles,
                               std::vector<Endpoints> edges)
    : ids_(std::move(ids)), roles_(std::move(roles)), graph_(ids_.size(), std::move(edges)) {
  for (const auto& [a, b] : graph_.edges()) {
    if (roles_[a] == roles_[b]) {
      throw ValidationError(ids_[a], "edge between '" + ids_[a] + "' and '" + ids_[b] +
                                         "' joins two nodes of the same role");
    }
  }
}

std::optional<NodeId> BipartiteGraph::find(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeId>(it - ids_.begin());
}

NodeId BipartiteGraph::primal_end(EdgeId e) const {
  const auto& [a, b] = graph_.endpoints(e);
  return roles_[a] == NodeRole::Primal ? a : b;
}

NodeId BipartiteGraph::dual_end(EdgeId e) const {
  const auto& [a, b] = graph_.endpoints(e);
  return roles_[a] == NodeRole::Dual ? a : b;
}

std::optional<EdgeId> BipartiteGraph::find_edge(NodeId a, NodeId b) const {
  auto adj = graph_.incident(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [](const Incidence& inc, NodeId v) { return inc.neighbor < v; });
  if (it == adj.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

std::vector<NodeId> BipartiteGraph::primal_nodes() const {
  std::vector<NodeId> out;
  for (NodeId x = 0; x < roles_.size(); ++x) {
    if (roles_[x] == NodeRole::Primal) out.push_back(x);
  }
  return out;
}

std::vector<NodeId> BipartiteGraph::dual_nodes() const {
  std::vector<NodeId> out;
  for (NodeId x = 0; x < roles_.size(); ++x) {
    if (roles_[x] == NodeRole::Dual) out.push_back(x);
  }
  return out;
}

BipartiteGraph BipartiteGraph::swapped_roles() const {
  BipartiteGraph out = *this;
  for (auto& r : out.roles_) r = opposite(r);
  return out;
}

BipartiteGraph build_bipartite(const Hypergraph& h) {
  h.validate();
  std::vector<std::string> ids(h.vertices().begin(), h.vertices().end());
  for (const auto& [e, vs] : h.hyperedges()) ids.push_back(e);
  std::sort(ids.begin(), ids.end());
  std::vector<NodeRole> roles(ids.size());
  auto index = [&](const std::string& id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (NodeId x = 0; x < ids.size(); ++x) {
    roles[x] = h.has_vertex(ids[x]) ? NodeRole::Primal : NodeRole::Dual;
  }
  std::vector<Endpoints> edges;
  edges.reserve(h.incidence_count());
  for (const auto& [e, vs] : h.hyperedges()) {
    NodeId d = index(e);
    for (const auto& v : vs) {
      NodeId p = index(v);
      edges.push_back({std::min(p, d), std::max(p, d)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Endpoints& l, const Endpoints& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return BipartiteGraph(std::move(ids), std::move(roles), std::move(edges));
}

Hypergraph to_hypergraph(const BipartiteGraph& g) {
  Hypergraph h;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (g.role(x) == NodeRole::Primal) h.add_vertex(g.id(x));
  }
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (g.role(x) != NodeRole::Dual) continue;
    Hypergraph::Members m;
    for (const auto& inc : g.graph().incident(x)) m.insert(g.id(inc.neighbor));
    h.add_hyperedge(g.id(x), std::move(m));
  }
  return h;
}

}  // namespace hypersimp
