#include "hypersimp/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hypersimp {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational entanglement(std::int64_t betti1, std::size_t nodes) {
  if (nodes == 0) return {};
  return Rational::make(betti1, static_cast<std::int64_t>(nodes));
}

namespace {

std::size_t index_in(const std::vector<NodeId>& sorted, NodeId x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) throw std::out_of_range("node not in structure");
  return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<NodeId> nodes_of(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<NodeId> out;
  for (EdgeId e : edges) {
    out.push_back(g.endpoints(e).a);
    out.push_back(g.endpoints(e).b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Centre of a tree given by its edges (lowest index on ties).
NodeId tree_centre(const Multigraph& g, const std::vector<NodeId>& nodes, const std::vector<EdgeId>& edges) {
  if (nodes.size() <= 2) return nodes.front();
  std::vector<std::size_t> deg(nodes.size(), 0);
  std::vector<std::vector<NodeId>> adj(nodes.size());
  for (EdgeId e : edges) {
    auto a = index_in(nodes, g.endpoints(e).a);
    auto b = index_in(nodes, g.endpoints(e).b);
    adj[a].push_back(static_cast<NodeId>(b));
    adj[b].push_back(static_cast<NodeId>(a));
    ++deg[a];
    ++deg[b];
  }
  std::vector<NodeId> layer;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (deg[i] <= 1) layer.push_back(static_cast<NodeId>(i));
  }
  std::size_t remaining = nodes.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<NodeId> next;
    for (NodeId x : layer) {
      for (NodeId y : adj[x]) {
        if (--deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  return nodes[*std::min_element(layer.begin(), layer.end())];
}

}  // namespace

std::uint32_t TreeStructure::depth_of(NodeId x) const { return depth[index_in(nodes, x)]; }
std::uint32_t TreeStructure::low_of(NodeId x) const { return low[index_in(nodes, x)]; }
NodeId TreeStructure::anchor_of(NodeId x) const { return anchor[index_in(nodes, x)]; }
bool TreeStructure::is_root(NodeId x) const {
  return std::any_of(roots.begin(), roots.end(), [x](const TreeRoot& r) { return r.node == x; });
}

BlockDecomposition block_decomposition(const Multigraph& g) {
  auto bc = biconnected_components(g);
  BlockDecomposition out;
  for (auto& edges : bc.blocks) {
    Block b;
    b.nodes = nodes_of(g, edges);
    std::sort(edges.begin(), edges.end());
    b.edges = std::move(edges);
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& l, const Block& r) { return l.edges.front() < r.edges.front(); });
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (bc.articulation[x]) out.articulation.push_back(x);
  }
  return out;
}

std::vector<Cycle> block_basis(const Multigraph& g, std::span<const EdgeId> block_edges,
                               const BasisOptions& options) {
  Subgraph sub = induced_by_edges(g, {block_edges.begin(), block_edges.end()});
  auto local = tight_cycle_basis(sub.graph, options);
  std::vector<Cycle> out;
  out.reserve(local.size());
  for (const auto& c : local) {
    out.push_back(cycle_from_edges(g, lift_cycle(c, sub.node_to_parent, sub.edge_to_parent).edges));
  }
  return out;
}

TopologicalDecomposition topological_decomposition(const Multigraph& g,
                                                   const DecompositionOptions& options) {
  const std::size_t n = g.node_count();
  TopologicalDecomposition d;
  d.components = connected_components(g);
  d.edge_owner.assign(g.edge_count(), {StructureKind::Tree, 0});

  auto blocks = block_decomposition(g);
  std::vector<std::optional<std::uint32_t>> block_of_node(n);
  std::vector<EdgeId> single_edges;
  for (auto& b : blocks.blocks) {
    if (b.edges.size() == 1) {
      single_edges.push_back(b.edges.front());
      continue;
    }
    TopologicalBlock t;
    t.id = static_cast<std::uint32_t>(d.blocks.size());
    t.nodes = std::move(b.nodes);
    t.edges = std::move(b.edges);
    t.betti1 = 1 + static_cast<std::int64_t>(t.edges.size()) - static_cast<std::int64_t>(t.nodes.size());
    t.entanglement = entanglement(t.betti1, t.nodes.size());
    for (NodeId x : t.nodes) {
      if (!block_of_node[x]) block_of_node[x] = t.id;
    }
    for (EdgeId e : t.edges) d.edge_owner[e] = {StructureKind::Block, t.id};
    d.blocks.push_back(std::move(t));
  }

  // Trees: single-edge blocks joined at nodes that are in no topological block.
  std::sort(single_edges.begin(), single_edges.end());
  DisjointSets sets(single_edges.size());
  std::vector<std::size_t> first_at(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < single_edges.size(); ++i) {
    for (NodeId x : {g.endpoints(single_edges[i]).a, g.endpoints(single_edges[i]).b}) {
      if (block_of_node[x]) continue;
      if (first_at[x] == static_cast<std::size_t>(-1)) {
        first_at[x] = i;
      } else {
        sets.unite(first_at[x], i);
      }
    }
  }
  std::vector<std::vector<EdgeId>> groups;
  std::vector<std::size_t> group_of(single_edges.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < single_edges.size(); ++i) {
    std::size_t r = sets.find(i);
    if (group_of[r] == static_cast<std::size_t>(-1)) {
      group_of[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(single_edges[i]);
  }
  for (auto& edges : groups) {
    TreeStructure t;
    t.id = static_cast<std::uint32_t>(d.trees.size());
    t.nodes = nodes_of(g, edges);
    t.edges = std::move(edges);
    for (NodeId x : t.nodes) {
      if (block_of_node[x]) t.roots.push_back({x, block_of_node[x]});
    }
    if (t.roots.empty()) t.roots.push_back({tree_centre(g, t.nodes, t.edges), std::nullopt});
    t.kind = t.roots.size() >= 2 ? TreeKind::Bridge : TreeKind::Branch;
    for (EdgeId e : t.edges) d.edge_owner[e] = {StructureKind::Tree, t.id};
    d.trees.push_back(std::move(t));
  }
  for (NodeId x = 0; x < n; ++x) {
    if (g.degree(x) != 0) continue;
    TreeStructure t;
    t.id = static_cast<std::uint32_t>(d.trees.size());
    t.kind = TreeKind::Branch;
    t.nodes = {x};
    d.trees.push_back(std::move(t));
  }

  // One multi-source BFS over all tree edges from every root.
  std::vector<std::uint32_t> depth(n, kNoNode), low(n, 0);
  std::vector<NodeId> order;
  for (const auto& t : d.trees) {
    for (const auto& r : t.roots) {
      if (depth[r.node] == kNoNode) {
        depth[r.node] = 0;
        order.push_back(r.node);
      }
    }
  }
  std::vector<NodeId> parent(n, kNoNode), anchor(n, kNoNode);
  for (NodeId r : order) anchor[r] = r;
  for (std::size_t head = 0; head < order.size(); ++head) {
    NodeId x = order[head];
    for (const auto& inc : g.incident(x)) {
      if (d.edge_owner[inc.edge].kind != StructureKind::Tree) continue;
      if (depth[inc.neighbor] != kNoNode) continue;
      depth[inc.neighbor] = depth[x] + 1;
      parent[inc.neighbor] = x;
      anchor[inc.neighbor] = anchor[x];
      order.push_back(inc.neighbor);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    low[*it] = std::max(low[*it], depth[*it]);
    if (parent[*it] != kNoNode) low[parent[*it]] = std::max(low[parent[*it]], low[*it]);
  }
  // Every root of a bridge sees the full height of the bridge, not only the
  // part its search happened to claim.
  for (const auto& t : d.trees) {
    std::uint32_t height = 0;
    for (NodeId x : t.nodes) {
      if (depth[x] != kNoNode) height = std::max(height, depth[x]);
    }
    for (const auto& r : t.roots) low[r.node] = std::max(low[r.node], height);
  }
  for (auto& t : d.trees) {
    for (NodeId x : t.nodes) {
      const bool reached = depth[x] != kNoNode;
      t.depth.push_back(reached ? depth[x] : 0);
      t.low.push_back(reached ? low[x] : 0);
      t.anchor.push_back(reached ? anchor[x] : x);
    }
  }

  if (options.compute_basis && !d.blocks.empty()) {
    unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(d.blocks.size())));
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto work = [&] {
      try {
        for (std::size_t i = next++; i < d.blocks.size(); i = next++) {
          d.blocks[i].basis = block_basis(g, d.blocks[i].edges, options.basis);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = d.blocks.size();
      }
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
  }
  return d;
}

Betti betti_numbers(const Multigraph& g) {
  auto c = connected_components(g);
  Betti b;
  b.b0 = c.count;
  b.b1 = b.b0 + static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.node_count());
  return b;
}

Betti betti_numbers(const Hypergraph& h) { return betti_numbers(build_bipartite(h).graph()); }

}  // namespace hypersimp
