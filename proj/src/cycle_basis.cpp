#include "hypersimp/cycle_basis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "gf2.hpp"

namespace hypersimp {

using detail::BitVector;
using detail::Gf2Span;

bool Cycle::contains_node(NodeId x) const {
  return std::find(nodes.begin(), nodes.end(), x) != nodes.end();
}

bool Cycle::contains_edge(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Cycle cycle_from_edges(const Multigraph& g, std::span<const EdgeId> edges) {
  if (edges.size() < 2) throw std::invalid_argument("a cycle needs at least two edges");
  std::map<NodeId, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    at[g.endpoints(e).a].push_back(e);
    at[g.endpoints(e).b].push_back(e);
  }
  for (auto& [x, es] : at) {
    if (es.size() != 2) throw std::invalid_argument("edge set is not a simple cycle");
    std::sort(es.begin(), es.end());
    if (es[0] == es[1]) throw std::invalid_argument("repeated edge in cycle");
  }
  Cycle c;
  const NodeId start = at.begin()->first;
  NodeId x = start;
  EdgeId e = at.begin()->second[0];
  do {
    c.nodes.push_back(x);
    c.edges.push_back(e);
    x = g.opposite(e, x);
    const auto& es = at[x];
    e = es[0] == e ? es[1] : es[0];
  } while (x != start);
  if (c.edges.size() != edges.size()) throw std::invalid_argument("edge set has more than one cycle");
  return c;
}

Cycle lift_cycle(const Cycle& c, std::span<const NodeId> node_map, std::span<const EdgeId> edge_map) {
  Cycle out;
  out.nodes.reserve(c.nodes.size());
  out.edges.reserve(c.edges.size());
  for (NodeId x : c.nodes) out.nodes.push_back(node_map[x]);
  for (EdgeId e : c.edges) out.edges.push_back(edge_map[e]);
  return out;
}

namespace {

// Scratch BFS limited to a radius; buffers are reused across calls and only
// touched entries are reset.
class BoundedBfs {
 public:
  explicit BoundedBfs(std::size_t n) : dist_(n, kNoNode), via_(n, kNoEdge) {}

  void run(const Multigraph& g, NodeId source, NodeId radius) {
    for (NodeId x : touched_) {
      dist_[x] = kNoNode;
      via_[x] = kNoEdge;
    }
    touched_.clear();
    dist_[source] = 0;
    touched_.push_back(source);
    std::size_t head = 0;
    while (head < touched_.size()) {
      NodeId x = touched_[head++];
      if (dist_[x] >= radius) continue;
      for (const auto& inc : g.incident(x)) {
        if (dist_[inc.neighbor] != kNoNode) continue;
        dist_[inc.neighbor] = dist_[x] + 1;
        via_[inc.neighbor] = inc.edge;
        touched_.push_back(inc.neighbor);
      }
    }
  }

  NodeId dist(NodeId x) const { return dist_[x]; }
  std::vector<NodeId> path_nodes(const Multigraph& g, NodeId source, NodeId to) const {
    std::vector<NodeId> out{to};
    for (NodeId x = to; x != source;) {
      x = g.opposite(via_[x], x);
      out.push_back(x);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
  std::vector<EdgeId> path_edges(const Multigraph& g, NodeId source, NodeId to) const {
    std::vector<EdgeId> out;
    for (NodeId x = to; x != source; x = g.opposite(via_[x], x)) out.push_back(via_[x]);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<NodeId> dist_;
  std::vector<EdgeId> via_;
  std::vector<NodeId> touched_;
};

struct Shortcut {
  std::size_t i;  // cycle positions, i < j
  std::size_t j;
  std::vector<EdgeId> path;  // from nodes[i] to nodes[j], interior off the cycle
};

std::size_t arc_distance(std::size_t i, std::size_t j, std::size_t len) {
  std::size_t d = i > j ? i - j : j - i;
  return std::min(d, len - d);
}

std::optional<Shortcut> find_shortcut(const Multigraph& g, const Cycle& c, BoundedBfs& bfs,
                                      std::vector<std::size_t>& position) {
  const std::size_t len = c.length();
  constexpr std::size_t kOff = static_cast<std::size_t>(-1);
  for (std::size_t k = 0; k < len; ++k) position[c.nodes[k]] = k;
  std::optional<Shortcut> found;
  for (std::size_t i = 0; i < len && !found; ++i) {
    bfs.run(g, c.nodes[i], static_cast<NodeId>(len / 2));
    for (std::size_t j = 0; j < len; ++j) {
      if (j == i) continue;
      NodeId d = bfs.dist(c.nodes[j]);
      if (d == kNoNode || d >= arc_distance(i, j, len)) continue;
      // Shorten to a sub-path whose interior avoids the cycle; one of the
      // two pieces around an interior cycle node is itself a violation.
      auto nodes = bfs.path_nodes(g, c.nodes[i], c.nodes[j]);
      auto edges = bfs.path_edges(g, c.nodes[i], c.nodes[j]);
      std::size_t from = 0;
      for (std::size_t k = 1; k < nodes.size(); ++k) {
        std::size_t pk = position[nodes[k]];
        if (pk == kOff) continue;
        std::size_t pf = position[nodes[from]];
        if (k - from < arc_distance(pf, pk, len)) {
          Shortcut s{pf, pk, {edges.begin() + static_cast<std::ptrdiff_t>(from),
                              edges.begin() + static_cast<std::ptrdiff_t>(k)}};
          if (s.i > s.j) {
            std::swap(s.i, s.j);
            std::reverse(s.path.begin(), s.path.end());
          }
          found = std::move(s);
          break;
        }
        from = k;
      }
      if (found) break;
    }
  }
  for (NodeId x : c.nodes) position[x] = kOff;
  return found;
}

std::vector<EdgeId> arc_edges(const Cycle& c, std::size_t from, std::size_t to) {
  std::vector<EdgeId> out;
  for (std::size_t k = from; k != to; k = (k + 1) % c.length()) out.push_back(c.edges[k]);
  return out;
}

Gf2Span span_without(const std::vector<Cycle>& basis, std::size_t skip, std::size_t edge_count) {
  Gf2Span span(edge_count, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k != skip) span.insert(detail::make_bits(edge_count, basis[k].edges), k);
  }
  return span;
}

void tighten(const Multigraph& g, std::vector<Cycle>& basis) {
  BoundedBfs bfs(g.node_count());
  std::vector<std::size_t> position(g.node_count(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    while (auto cut = find_shortcut(g, basis[k], bfs, position)) {
      const Cycle& c = basis[k];
      auto first = arc_edges(c, cut->i, cut->j);
      auto second = arc_edges(c, cut->j, cut->i);
      first.insert(first.end(), cut->path.begin(), cut->path.end());
      second.insert(second.end(), cut->path.begin(), cut->path.end());
      // Exactly one of the halves keeps the basis independent.
      Gf2Span others = span_without(basis, k, g.edge_count());
      bool first_ok = !others.contains(detail::make_bits(g.edge_count(), first));
      basis[k] = cycle_from_edges(g, first_ok ? first : second);
    }
  }
}

void saturate_minimal(const Multigraph& g, std::vector<Cycle>& basis) {
  const std::size_t m = g.edge_count();
  Gf2Span minimal(m, basis.size() + 1);
  std::size_t minimal_count = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].minimal() && minimal.insert(detail::make_bits(m, basis[k].edges), k)) ++minimal_count;
  }
  if (minimal_count == basis.size()) return;
  for (const Cycle& z : length4_cycles(g)) {
    BitVector bits = detail::make_bits(m, z.edges);
    if (minimal.contains(bits)) continue;
    Gf2Span full = span_without(basis, basis.size(), m);
    auto combo = full.represent(bits);
    if (!combo) continue;  // cannot happen for a basis; keep going defensively
    std::size_t pick = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!combo->test(k) || basis[k].minimal()) continue;
      if (pick == basis.size() || basis[k].length() > basis[pick].length()) pick = k;
    }
    if (pick == basis.size()) continue;
    basis[pick] = z;
    minimal.insert(std::move(bits), pick);
    if (++minimal_count == basis.size()) return;
  }
}

}  // namespace

bool is_tight(const Multigraph& g, const Cycle& c) {
  BoundedBfs bfs(g.node_count());
  std::vector<std::size_t> position(g.node_count(), static_cast<std::size_t>(-1));
  return !find_shortcut(g, c, bfs, position).has_value();
}

std::vector<Cycle> nested_bfs_cycles(const Multigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<Cycle> out;
  if (n == 0) return out;
  std::vector<bool> in_s_node(n, false), in_s_edge(g.edge_count(), false);

  // Inner search state, reset per call through a visit stamp.
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<EdgeId> parent(n, kNoEdge);
  std::uint32_t round = 0;
  std::deque<NodeId> inner;

  auto tight_path = [&](NodeId x, NodeId y) {
    ++round;
    inner.clear();
    inner.push_back(x);
    stamp[x] = round;
    parent[x] = kNoEdge;
    while (!inner.empty()) {
      NodeId a = inner.front();
      inner.pop_front();
      for (const auto& inc : g.incident(a)) {
        if (!in_s_edge[inc.edge] || inc.edge == parent[a]) continue;
        NodeId b = inc.neighbor;
        if (stamp[b] == round) continue;
        stamp[b] = round;
        parent[b] = inc.edge;
        if (b == y) {
          std::vector<EdgeId> path;
          for (NodeId z = y; z != x; z = g.opposite(parent[z], z)) path.push_back(parent[z]);
          return path;
        }
        inner.push_back(b);
      }
    }
    throw std::logic_error("nested search found no path; graph is not connected");
  };

  std::deque<NodeId> outer{0};
  in_s_node[0] = true;
  while (!outer.empty()) {
    NodeId x = outer.front();
    outer.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (in_s_edge[inc.edge]) continue;
      NodeId y = inc.neighbor;
      if (in_s_node[y]) {
        auto edges = tight_path(x, y);
        edges.push_back(inc.edge);
        out.push_back(cycle_from_edges(g, edges));
      } else {
        in_s_node[y] = true;
        outer.push_back(y);
      }
      in_s_edge[inc.edge] = true;
    }
  }
  return out;
}

std::vector<Cycle> tight_cycle_basis(const Multigraph& g, const BasisOptions& options) {
  auto basis = nested_bfs_cycles(g);
  if (options.tighten) tighten(g, basis);
  if (options.saturate_minimal) saturate_minimal(g, basis);
  return basis;
}

std::vector<Cycle> length4_cycles(const Multigraph& g) {
  struct Via {
    NodeId mid;
    EdgeId first;
    EdgeId second;
  };
  std::vector<Cycle> out;
  std::vector<std::vector<Via>> common(g.node_count());
  std::vector<NodeId> touched;
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (const auto& ac : g.incident(a)) {
      for (const auto& cb : g.incident(ac.neighbor)) {
        NodeId b = cb.neighbor;
        if (b <= a) continue;
        auto& list = common[b];
        if (list.empty()) touched.push_back(b);
        if (!list.empty() && list.back().mid == ac.neighbor) continue;  // parallel edges
        list.push_back({ac.neighbor, ac.edge, cb.edge});
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId b : touched) {
      const auto& list = common[b];
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          const EdgeId es[] = {list[i].first, list[i].second, list[j].second, list[j].first};
          out.push_back(cycle_from_edges(g, es));
        }
      }
      common[b].clear();
    }
    touched.clear();
  }
  return out;
}

std::size_t cycle_rank(std::span<const Cycle> cycles, std::size_t edge_count) {
  Gf2Span span(edge_count, cycles.size());
  std::size_t rank = 0;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (span.insert(detail::make_bits(edge_count, cycles[k].edges), k)) ++rank;
  }
  return rank;
}

}  // namespace hypersimp
