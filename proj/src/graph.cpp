#include "hypersimp/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hypersimp {

Multigraph::Multigraph(std::size_t node_count, std::vector<Endpoints> edges)
    : edges_(std::move(edges)), offsets_(node_count + 1, 0) {
  for (const auto& [a, b] : edges_) {
    if (a >= node_count || b >= node_count) throw std::out_of_range("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loops are not supported");
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adjacency_[fill[edges_[e].a]++] = {edges_[e].b, e};
    adjacency_[fill[edges_[e].b]++] = {edges_[e].a, e};
  }
  for (std::size_t x = 0; x < node_count; ++x) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x + 1]),
              [](const Incidence& l, const Incidence& r) {
                return l.neighbor != r.neighbor ? l.neighbor < r.neighbor : l.edge < r.edge;
              });
  }
}

Subgraph induced_by_edges(const Multigraph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<NodeId> nodes;
  nodes.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    nodes.push_back(g.endpoints(e).a);
    nodes.push_back(g.endpoints(e).b);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto local = [&](NodeId x) {
    return static_cast<NodeId>(std::lower_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
  };
  std::vector<Endpoints> ends;
  ends.reserve(edges.size());
  for (EdgeId e : edges) ends.push_back({local(g.endpoints(e).a), local(g.endpoints(e).b)});
  Subgraph s{Multigraph(nodes.size(), std::move(ends)), std::move(nodes), std::move(edges)};
  return s;
}

Components connected_components(const Multigraph& g) {
  Components c;
  c.of_node.assign(g.node_count(), kNoNode);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (c.of_node[s] != kNoNode) continue;
    c.of_node[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (c.of_node[inc.neighbor] == kNoNode) {
          c.of_node[inc.neighbor] = c.count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++c.count;
  }
  return c;
}

std::vector<NodeId> bfs_distances(const Multigraph& g, NodeId source) {
  std::vector<NodeId> dist(g.node_count(), kNoNode);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (dist[inc.neighbor] == kNoNode) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

std::vector<EdgeId> shortest_path(const Multigraph& g, NodeId from, NodeId to,
                                  std::span<const bool> banned) {
  if (from == to) return {};
  std::vector<EdgeId> via(g.node_count(), kNoEdge);
  std::vector<bool> seen(g.node_count(), false);
  std::deque<NodeId> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    NodeId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (!banned.empty() && banned[inc.edge]) continue;
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      via[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  if (!seen[to]) return {};
  std::vector<EdgeId> path;
  for (NodeId x = to; x != from; x = g.opposite(via[x], x)) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

Biconnected biconnected_components(const Multigraph& g) {
  const std::size_t n = g.node_count();
  Biconnected out;
  out.block_of_edge.assign(g.edge_count(), kNoNode);
  out.articulation.assign(n, false);

  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<NodeId> dfs;
  std::uint32_t time = 0;

  auto pop_block = [&](EdgeId until) {
    std::vector<EdgeId> block;
    while (true) {
      EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    std::reverse(block.begin(), block.end());
    const auto id = static_cast<std::uint32_t>(out.blocks.size());
    for (EdgeId e : block) out.block_of_edge[e] = id;
    out.blocks.push_back(std::move(block));
  };

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++time;
    std::size_t root_children = 0;
    dfs.push_back(root);
    while (!dfs.empty()) {
      NodeId x = dfs.back();
      auto adj = g.incident(x);
      if (cursor[x] < adj.size()) {
        const Incidence inc = adj[cursor[x]++];
        if (inc.edge == parent_edge[x]) continue;
        NodeId y = inc.neighbor;
        if (disc[y] == 0) {
          parent_edge[y] = inc.edge;
          disc[y] = low[y] = ++time;
          edge_stack.push_back(inc.edge);
          if (x == root) ++root_children;
          dfs.push_back(y);
        } else if (disc[y] < disc[x]) {
          edge_stack.push_back(inc.edge);
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      dfs.pop_back();
      if (dfs.empty()) break;
      NodeId p = dfs.back();
      low[p] = std::min(low[p], low[x]);
      if (low[x] >= disc[p]) {
        if (p != root) out.articulation[p] = true;
        pop_block(parent_edge[x]);
      }
    }
    if (root_children >= 2) out.articulation[root] = true;
  }
  return out;
}

namespace {

// Shared Brandes accumulation; fills node and/or edge scores.
void brandes(const Multigraph& g, std::vector<double>* nodes, std::vector<double>* edges) {
  const std::size_t n = g.node_count();
  std::vector<double> sigma(n), delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (const auto& inc : g.incident(x)) {
        NodeId y = inc.neighbor;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
        if (dist[y] == dist[x] + 1) sigma[y] += sigma[x];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (const auto& inc : g.incident(w)) {
        NodeId v = inc.neighbor;
        if (dist[v] == dist[w] - 1) {
          double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
          if (edges != nullptr) (*edges)[inc.edge] += c;
          delta[v] += c;
        }
      }
      if (nodes != nullptr && w != s) (*nodes)[w] += delta[w];
    }
  }
  if (nodes != nullptr) {
    for (double& v : *nodes) v /= 2.0;
  }
  if (edges != nullptr) {
    for (double& v : *edges) v /= 2.0;
  }
}

}  // namespace

std::vector<double> node_betweenness(const Multigraph& g) {
  std::vector<double> out(g.node_count(), 0.0);
  brandes(g, &out, nullptr);
  return out;
}

std::vector<double> edge_betweenness(const Multigraph& g) {
  std::vector<double> out(g.edge_count(), 0.0);
  brandes(g, nullptr, &out);
  return out;
}

}  // namespace hypersimp
