#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::vector<std::vector<NodeId>> adjacency(const Multigraph& g) {
  std::vector<std::vector<NodeId>> adj(g.node_count());
  for (const auto& e : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Simple graph as neighbour sets, for the planarity reduction.
using SimpleGraph = std::map<NodeId, std::set<NodeId>>;

SimpleGraph reduce(const Multigraph& g) {
  SimpleGraph s;
  for (const auto& e : g.edges()) {
    if (e.a == e.b) continue;
    s[e.a].insert(e.b);
    s[e.b].insert(e.a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = s.begin(); it != s.end();) {
      const NodeId x = it->first;
      auto& nb = it->second;
      if (nb.size() <= 1) {
        for (NodeId y : nb) s[y].erase(x);
        it = s.erase(it);
        changed = true;
      } else if (nb.size() == 2) {
        const NodeId a = *nb.begin(), b = *nb.rbegin();
        s[a].erase(x);
        s[b].erase(x);
        s[a].insert(b);
        s[b].insert(a);
        it = s.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return s;
}

}  // namespace

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t nv, std::size_t ne, std::size_t max_card) {
  std::map<std::string, std::vector<std::string>> inc;
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::set<std::string> used;
  std::vector<std::string> es;
  for (std::size_t j = 0; j < ne; ++j) {
    const std::string e = "e" + std::to_string(j);
    es.push_back(e);
    const std::size_t card = 1 + pick(rng, std::min(max_card, nv));
    std::vector<std::string> pool = vs;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(card);
    for (const auto& v : pool) used.insert(v);
    inc[e] = pool;
  }
  for (const auto& v : vs) {
    if (used.count(v) == 0 && !es.empty()) inc[es[pick(rng, es.size())]].push_back(v);
  }
  return Hypergraph::from_incidence(inc);
}

Hypergraph random_connected_hypergraph(std::mt19937_64& rng, std::size_t nv, std::size_t ne, std::size_t max_card) {
  Hypergraph h = random_hypergraph(rng, nv, ne, max_card);
  // Union vertices through hyperedges, then link every component to the first.
  std::vector<std::string> vs(h.vertices().begin(), h.vertices().end());
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < vs.size(); ++i) at[vs[i]] = i;
  Dsu d(vs.size());
  for (const auto& [e, m] : h.hyperedges()) {
    for (const auto& v : m) d.unite(at[*m.begin()], at[v]);
  }
  std::size_t k = 0;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (d.find(i) == d.find(0)) continue;
    const std::size_t other = pick(rng, i);
    const std::size_t a = d.find(other) == d.find(0) ? other : 0;
    h.add_hyperedge("j" + std::to_string(k++), {vs[a], vs[i]});
    d.unite(a, i);
  }
  h.validate();
  return h;
}

Hypergraph random_nonplanar_hypergraph(std::mt19937_64& rng, std::size_t max_elements) {
  const std::size_t budget = std::max<std::size_t>(max_elements, 12) - 6;
  const std::size_t nv = 2 + pick(rng, std::max<std::size_t>(budget / 2 - 1, 1));
  const std::size_t ne = 1 + pick(rng, std::max<std::size_t>(budget / 3, 1));
  Hypergraph h = random_connected_hypergraph(rng, nv, ne, 4);
  // A K3,3 gadget, its three hyperedges either full or subdivided.
  const std::vector<std::string> a{"ka", "kb", "kc"};
  for (const auto& v : a) h.add_vertex(v);
  for (std::size_t i = 0; i < 3; ++i) {
    std::set<std::string> m(a.begin(), a.end());
    const std::string e = "k" + std::to_string(i);
    if (rng() % 3 == 0) {
      // Replace incidence (ka, e) by a path ka - s - t - e.
      const std::string s = "ks" + std::to_string(i), t = "kt" + std::to_string(i);
      h.add_vertex(t);
      h.add_hyperedge(s, {"ka", t});
      m.erase("ka");
      m.insert(t);
    }
    h.add_hyperedge(e, m);
  }
  std::vector<std::string> vs;
  for (const auto& v : h.vertices()) {
    if (v[0] == 'v') vs.push_back(v);
  }
  h.add_hyperedge("khook", {vs[pick(rng, vs.size())], a[pick(rng, 3)]});
  h.validate();
  return h;
}

Hypergraph random_tree_hypergraph(std::mt19937_64& rng, std::size_t nodes) {
  nodes = std::max<std::size_t>(nodes, 2);
  std::vector<std::size_t> parent(nodes, 0), depth(nodes, 0);
  for (std::size_t i = 1; i < nodes; ++i) {
    parent[i] = pick(rng, i);
    depth[i] = depth[parent[i]] + 1;
  }
  auto name = [&](std::size_t i) { return (depth[i] % 2 == 0 ? "v" : "e") + std::to_string(i); };
  std::map<std::string, std::vector<std::string>> inc;
  for (std::size_t i = 1; i < nodes; ++i) {
    const std::size_t p = parent[i];
    if (depth[i] % 2 == 1) {
      inc[name(i)].push_back(name(p));
    } else {
      inc[name(p)].push_back(name(i));
    }
  }
  return Hypergraph::from_incidence(inc);
}

Multigraph random_simple_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<hypersimp::Endpoints> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (u(rng) < p) edges.push_back({a, b});
    }
  }
  return Multigraph(n, edges);
}

Multigraph complete_graph(std::size_t n) {
  std::vector<hypersimp::Endpoints> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Multigraph(n, edges);
}

Multigraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<hypersimp::Endpoints> edges;
  for (NodeId x = 0; x < a; ++x) {
    for (std::size_t y = 0; y < b; ++y) edges.push_back({x, static_cast<NodeId>(a + y)});
  }
  return Multigraph(a + b, edges);
}

std::vector<int> distances(const Multigraph& g, NodeId s) {
  const auto adj = adjacency(g);
  std::vector<int> d(g.node_count(), -1);
  std::deque<NodeId> q{s};
  d[s] = 0;
  while (!q.empty()) {
    const NodeId x = q.front();
    q.pop_front();
    for (NodeId y : adj[x]) {
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

std::size_t component_count(const Multigraph& g, const std::vector<bool>& removed) {
  auto gone = [&](NodeId x) { return !removed.empty() && removed[x]; };
  Dsu d(g.node_count());
  for (const auto& e : g.edges()) {
    if (!gone(e.a) && !gone(e.b)) d.unite(e.a, e.b);
  }
  std::set<std::size_t> roots;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (!gone(x)) roots.insert(d.find(x));
  }
  return roots.size();
}

std::vector<bool> articulation_by_deletion(const Multigraph& g) {
  std::vector<bool> out(g.node_count(), false);
  const std::size_t base = component_count(g);
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (g.degree(x) == 0) continue;
    std::vector<bool> removed(g.node_count(), false);
    removed[x] = true;
    out[x] = component_count(g, removed) > base;
  }
  return out;
}

std::size_t gf2_rank(const std::vector<std::vector<EdgeId>>& sets, std::size_t edge_count) {
  const std::size_t words = (edge_count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot(edge_count);
  std::size_t rank = 0;
  for (const auto& s : sets) {
    std::vector<std::uint64_t> row(words, 0);
    for (EdgeId e : s) row[e / 64] ^= std::uint64_t{1} << (e % 64);
    for (std::size_t bit = edge_count; bit-- > 0;) {
      if (((row[bit / 64] >> (bit % 64)) & 1U) == 0) continue;
      if (pivot[bit].empty()) {
        pivot[bit] = row;
        ++rank;
        break;
      }
      for (std::size_t w = 0; w < words; ++w) row[w] ^= pivot[bit][w];
    }
  }
  return rank;
}

bool tight_by_all_pairs(const Multigraph& g, const hypersimp::Cycle& c) {
  const std::size_t n = c.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = distances(g, c.nodes[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t arc = std::min(j - i, n - (j - i));
      if (d[c.nodes[j]] != static_cast<int>(arc)) return false;
    }
  }
  return true;
}

bool simple_alternating_cycle(const hypersimp::BipartiteGraph& g, const hypersimp::Cycle& c) {
  const std::size_t n = c.nodes.size();
  if (n < 4 || n % 2 != 0 || c.edges.size() != n) return false;
  std::set<NodeId> seen(c.nodes.begin(), c.nodes.end());
  std::set<EdgeId> seen_e(c.edges.begin(), c.edges.end());
  if (seen.size() != n || seen_e.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId a = c.nodes[i], b = c.nodes[(i + 1) % n];
    const auto& ep = g.graph().endpoints(c.edges[i]);
    if (!((ep.a == a && ep.b == b) || (ep.a == b && ep.b == a))) return false;
    if (g.role(a) == g.role(b)) return false;
  }
  return true;
}

std::optional<bool> planar_by_rotations(const Multigraph& g, std::uint64_t budget) {
  SimpleGraph s = reduce(g);
  if (s.empty()) return true;
  std::size_t v = s.size(), e = 0;
  for (const auto& [x, nb] : s) e += nb.size();
  e /= 2;
  if (v >= 3 && e > 3 * v - 6) return false;

  std::vector<NodeId> nodes;
  std::map<NodeId, std::size_t> at;
  for (const auto& [x, nb] : s) {
    at[x] = nodes.size();
    nodes.push_back(x);
  }
  // Rotation of node i: first neighbour fixed, the rest permuted.
  std::vector<std::vector<NodeId>> rot;
  long double total = 1;
  for (NodeId x : nodes) {
    rot.emplace_back(s[x].begin(), s[x].end());
    for (std::size_t k = 2; k < rot.back().size(); ++k) total *= static_cast<long double>(k);
  }
  if (total > static_cast<long double>(budget)) return std::nullopt;

  // Components of the reduced graph, for Euler's formula.
  Dsu d(nodes.size());
  for (const auto& [x, nb] : s) {
    for (NodeId y : nb) d.unite(at[x], at[y]);
  }
  std::set<std::size_t> comps;
  for (std::size_t i = 0; i < nodes.size(); ++i) comps.insert(d.find(i));
  const long target = 2 * static_cast<long>(comps.size());

  auto faces = [&] {
    // Dart (x -> y); next dart after arriving at y from x is (y -> succ_y(x)).
    std::map<std::pair<NodeId, NodeId>, bool> used;
    long f = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (NodeId y : rot[i]) {
        std::pair<NodeId, NodeId> dart{nodes[i], y};
        if (used[dart]) continue;
        ++f;
        while (!used[dart]) {
          used[dart] = true;
          const auto& r = rot[at[dart.second]];
          const auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), dart.first) - r.begin());
          dart = {dart.second, r[(pos + 1) % r.size()]};
        }
      }
    }
    return f;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == nodes.size()) return static_cast<long>(v) - static_cast<long>(e) + faces() == target;
    auto& r = rot[i];
    std::sort(r.begin() + 1, r.end());
    do {
      if (search(i + 1)) return true;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return false;
  };
  return search(0);
}

Multigraph edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& keep) {
  std::vector<hypersimp::Endpoints> edges;
  for (EdgeId e : keep) edges.push_back(g.endpoints(e));
  return Multigraph(g.node_count(), edges);
}

bool is_kuratowski_subdivision(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::set<EdgeId> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size() || edges.empty()) return false;
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) return false;
  }
  const Multigraph s = edge_subgraph(g, edges);
  const auto adj = adjacency(s);
  std::vector<NodeId> branch;
  std::size_t used = 0;
  for (NodeId x = 0; x < s.node_count(); ++x) {
    if (adj[x].empty()) continue;
    ++used;
    if (adj[x].size() == 2) continue;
    branch.push_back(x);
  }
  std::vector<bool> removed(s.node_count(), false);
  for (NodeId x = 0; x < s.node_count(); ++x) removed[x] = adj[x].empty();
  if (component_count(s, removed) != 1 || used == 0) return false;

  const bool k5 = branch.size() == 5 && std::all_of(branch.begin(), branch.end(), [&](NodeId x) { return adj[x].size() == 4; });
  const bool k33 = branch.size() == 6 && std::all_of(branch.begin(), branch.end(), [&](NodeId x) { return adj[x].size() == 3; });
  if (!k5 && !k33) return false;

  // Follow each branch path through degree-2 nodes.
  std::set<NodeId> is_branch(branch.begin(), branch.end());
  std::map<std::pair<NodeId, NodeId>, int> paths;
  for (NodeId b : branch) {
    for (NodeId first : adj[b]) {
      NodeId prev = b, cur = first;
      while (is_branch.count(cur) == 0) {
        const NodeId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        if (cur == b && is_branch.count(cur) == 0) return false;
      }
      if (cur == b) return false;
      ++paths[std::minmax(b, cur)];
    }
  }
  for (const auto& [pair, n] : paths) {
    if (n != 2) return false;  // each path is walked once from either end
  }
  if (k5) return paths.size() == 10;
  if (paths.size() != 9) return false;
  // Branch graph must be K3,3: bipartite with both sides of size 3.
  std::map<NodeId, int> side;
  side[branch[0]] = 0;
  std::deque<NodeId> q{branch[0]};
  while (!q.empty()) {
    const NodeId x = q.front();
    q.pop_front();
    for (const auto& [pair, n] : paths) {
      NodeId y;
      if (pair.first == x) {
        y = pair.second;
      } else if (pair.second == x) {
        y = pair.first;
      } else {
        continue;
      }
      if (side.count(y) == 0) {
        side[y] = 1 - side[x];
        q.push_back(y);
      } else if (side[y] == side[x]) {
        return false;
      }
    }
  }
  const auto ones = std::count_if(side.begin(), side.end(), [](const auto& kv) { return kv.second == 1; });
  return side.size() == 6 && ones == 3;
}

namespace {

using Sets = std::vector<std::set<std::string>>;

// Hyperedges as member sets plus the vertex list.
struct Flat {
  std::vector<std::string> vertices;
  Sets edges;
};

Flat flatten(const Hypergraph& h) {
  Flat f;
  f.vertices.assign(h.vertices().begin(), h.vertices().end());
  for (const auto& [e, m] : h.hyperedges()) f.edges.emplace_back(m.begin(), m.end());
  return f;
}

Flat dual_of(const Flat& f) {
  Flat d;
  for (std::size_t j = 0; j < f.edges.size(); ++j) d.vertices.push_back("E" + std::to_string(j));
  for (const auto& v : f.vertices) {
    std::set<std::string> m;
    for (std::size_t j = 0; j < f.edges.size(); ++j) {
      if (f.edges[j].count(v) != 0) m.insert("E" + std::to_string(j));
    }
    if (!m.empty()) d.edges.push_back(m);
  }
  return d;
}

std::size_t common(const std::vector<const std::set<std::string>*>& es) {
  std::size_t n = 0;
  for (const auto& v : *es[0]) {
    if (std::all_of(es.begin() + 1, es.end(), [&](const auto* e) { return e->count(v) != 0; })) ++n;
  }
  return n;
}

bool has_bundle(const Flat& f) {
  const std::size_t m = f.edges.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (common({&f.edges[a], &f.edges[b]}) >= 3) return true;
      for (std::size_t c = b + 1; c < m; ++c) {
        if (common({&f.edges[a], &f.edges[b], &f.edges[c]}) >= 2) return true;
      }
    }
  }
  return false;
}

// Some v0 such that the other vertices and the hyperedges through v0 hold a
// cycle v1 e1 v2 e2 ... vk ek with k >= 3.
bool has_strangled_cycle(const Flat& f) {
  for (const auto& v0 : f.vertices) {
    std::vector<std::size_t> through;
    for (std::size_t j = 0; j < f.edges.size(); ++j) {
      if (f.edges[j].count(v0) != 0) through.push_back(j);
    }
    if (through.size() < 3) continue;
    std::vector<std::string> others;
    for (const auto& v : f.vertices) {
      if (v != v0) others.push_back(v);
    }
    // Bipartite graph: others (0..n-1) and `through` hyperedges (n..).
    const std::size_t n = others.size(), total = n + through.size();
    std::vector<std::vector<std::size_t>> adj(total);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < through.size(); ++t) {
        if (f.edges[through[t]].count(others[i]) != 0) {
          adj[i].push_back(n + t);
          adj[n + t].push_back(i);
        }
      }
    }
    // Any simple cycle of length >= 6 starting at its smallest node.
    std::vector<bool> on(total, false);
    std::function<bool(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t x,
                                                                         std::size_t len) -> bool {
      for (std::size_t y : adj[x]) {
        if (y == start && len >= 6) return true;
        if (y <= start || on[y]) continue;
        on[y] = true;
        if (dfs(start, y, len + 1)) return true;
        on[y] = false;
      }
      return false;
    };
    for (std::size_t s = 0; s < total; ++s) {
      std::fill(on.begin(), on.end(), false);
      on[s] = true;
      if (dfs(s, s, 1)) return true;
    }
  }
  return false;
}

// v0 in e0 plus three pairs (vi, ei), all distinct, vi in e0 and ei, v0 in ei.
bool has_star(const Flat& f) {
  for (const auto& v0 : f.vertices) {
    for (std::size_t e0 = 0; e0 < f.edges.size(); ++e0) {
      if (f.edges[e0].count(v0) == 0) continue;
      std::vector<std::pair<std::string, std::size_t>> pts;
      for (const auto& v : f.edges[e0]) {
        if (v == v0) continue;
        for (std::size_t e = 0; e < f.edges.size(); ++e) {
          if (e != e0 && f.edges[e].count(v) != 0 && f.edges[e].count(v0) != 0) pts.emplace_back(v, e);
        }
      }
      const std::size_t n = pts.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          for (std::size_t c = b + 1; c < n; ++c) {
            const std::set<std::string> vs{pts[a].first, pts[b].first, pts[c].first};
            const std::set<std::size_t> es{pts[a].second, pts[b].second, pts[c].second};
            if (vs.size() == 3 && es.size() == 3) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

bool brute_force_forbidden(const Hypergraph& h) {
  const Flat f = flatten(h);
  const Flat d = dual_of(f);
  return has_bundle(f) || has_bundle(d) || has_strangled_cycle(f) || has_strangled_cycle(d) || has_star(f) ||
         has_star(d);
}

bool simple_polygon(const std::vector<hypersimp::Point>& p) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  auto orient = [](const hypersimp::Point& a, const hypersimp::Point& b, const hypersimp::Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v > 1e-12 ? 1 : (v < -1e-12 ? -1 : 0);
  };
  auto on_seg = [](const hypersimp::Point& a, const hypersimp::Point& b, const hypersimp::Point& c) {
    return std::min(a.x, b.x) - 1e-12 <= c.x && c.x <= std::max(a.x, b.x) + 1e-12 &&
           std::min(a.y, b.y) - 1e-12 <= c.y && c.y <= std::max(a.y, b.y) + 1e-12;
  };
  auto meet = [&](const hypersimp::Point& a, const hypersimp::Point& b, const hypersimp::Point& c,
                  const hypersimp::Point& d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && on_seg(a, b, c)) || (o2 == 0 && on_seg(a, b, d)) || (o3 == 0 && on_seg(c, d, a)) ||
           (o4 == 0 && on_seg(c, d, b));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[i] == p[j]) return false;
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (meet(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n])) return false;
    }
  }
  return true;
}

bool well_formed_xml(const std::string& t) {
  std::vector<std::string> stack;
  std::size_t roots = 0, pos = 0;
  while ((pos = t.find('<', pos)) != std::string::npos) {
    const std::size_t end = t.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = t.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?') {
      if (tag.back() != '?') return false;
      continue;
    }
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const bool self = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" /\n\t"));
    if (name.empty()) return false;
    if (stack.empty()) ++roots;
    if (!self) stack.push_back(name);
  }
  return stack.empty() && roots == 1;
}

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + needle.size())) ++n;
  return n;
}

}  // namespace oracle
