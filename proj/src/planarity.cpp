#include "hypersimp/planarity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

namespace hypersimp {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
using Embedding = std::vector<std::vector<BoostEdge>>;

// Builds a simple Boost graph; `kept` receives the edge id behind each Boost
// edge index (the first of every parallel class).
BoostGraph to_boost(std::size_t n, const std::vector<Endpoints>& edges, std::vector<EdgeId>& kept) {
  BoostGraph bg(n);
  std::map<std::pair<NodeId, NodeId>, bool> seen;
  kept.clear();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    auto key = std::minmax(edges[e].a, edges[e].b);
    if (!seen.emplace(key, true).second) continue;
    boost::add_edge(edges[e].a, edges[e].b, static_cast<int>(kept.size()), bg);
    kept.push_back(e);
  }
  return bg;
}

bool planar_edges(std::size_t n, const std::vector<Endpoints>& edges) {
  std::vector<EdgeId> kept;
  BoostGraph bg = to_boost(n, edges, kept);
  return boost::boyer_myrvold_planarity_test(bg);
}

struct FaceCollector : public boost::planar_face_traversal_visitor {
  explicit FaceCollector(const BoostGraph& g, std::vector<std::vector<int>>& faces) : g_(g), faces_(faces) {}
  void begin_face() { faces_.emplace_back(); }
  void next_edge(BoostEdge e) { faces_.back().push_back(boost::get(boost::edge_index, g_, e)); }

 private:
  const BoostGraph& g_;
  std::vector<std::vector<int>>& faces_;
};

// Working drawing during edge insertion: a planar graph with dummy nodes at
// crossings; every edge remembers the T' edge it is a piece of.
struct Drawing {
  std::size_t nodes = 0;
  std::vector<Endpoints> edges;
  std::vector<EdgeId> origin;
};

// Routes (u, v) through the dual of the current embedding and returns the
// drawing edges it crosses, in order.
std::vector<EdgeId> route(const Drawing& d, NodeId u, NodeId v) {
  std::vector<EdgeId> kept;
  BoostGraph bg = to_boost(d.nodes, d.edges, kept);
  if (kept.size() != d.edges.size()) throw std::logic_error("drawing acquired parallel edges");
  Embedding emb(d.nodes);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = &emb[0])) {
    throw std::logic_error("drawing lost planarity during edge insertion");
  }
  std::vector<std::vector<int>> faces;
  FaceCollector visitor(bg, faces);
  boost::planar_face_traversal(bg, &emb[0], visitor);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, std::size_t>> sides(d.edges.size(), {kNone, kNone});
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int e : faces[f]) {
      auto& s = sides[static_cast<std::size_t>(e)];
      (s.first == kNone ? s.first : s.second) = f;
    }
  }
  std::vector<bool> at_u(faces.size(), false), at_v(faces.size(), false);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int e : faces[f]) {
      const auto& ep = d.edges[static_cast<std::size_t>(e)];
      if (ep.a == u || ep.b == u) at_u[f] = true;
      if (ep.a == v || ep.b == v) at_v[f] = true;
    }
  }
  std::vector<std::size_t> prev_face(faces.size(), kNone);
  std::vector<int> prev_edge(faces.size(), -1);
  std::vector<bool> seen(faces.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (at_u[f]) {
      seen[f] = true;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    if (at_v[f]) {
      std::vector<EdgeId> crossed;
      for (std::size_t g = f; prev_face[g] != kNone; g = prev_face[g]) {
        crossed.push_back(static_cast<EdgeId>(prev_edge[g]));
      }
      std::reverse(crossed.begin(), crossed.end());
      return crossed;
    }
    // Sorted edge order keeps the search deterministic.
    std::vector<int> around = faces[f];
    std::sort(around.begin(), around.end());
    for (int e : around) {
      const auto& s = sides[static_cast<std::size_t>(e)];
      std::size_t other = s.first == f ? s.second : s.first;
      if (other == kNone || other == f || seen[other]) continue;
      seen[other] = true;
      prev_face[other] = f;
      prev_edge[other] = e;
      queue.push_back(other);
    }
  }
  throw std::logic_error("no dual route between endpoints; graph is disconnected");
}

struct Attempt {
  std::vector<CrossingPair> pairs;
  std::size_t crossings = 0;
};

Attempt insert_all(const Multigraph& g, const std::vector<EdgeId>& planar, const std::vector<EdgeId>& order,
                   std::size_t permutation) {
  Drawing d;
  d.nodes = g.node_count();
  for (EdgeId e : planar) {
    d.edges.push_back(g.endpoints(e));
    d.origin.push_back(e);
  }
  Attempt out;
  for (EdgeId e : order) {
    const auto [u, v] = g.endpoints(e);
    auto crossed = route(d, u, v);
    out.crossings += crossed.size();
    NodeId last = u;
    for (EdgeId c : crossed) {
      const NodeId dummy = static_cast<NodeId>(d.nodes++);
      const NodeId far = d.edges[c].b;
      d.edges[c].b = dummy;
      d.edges.push_back({dummy, far});
      d.origin.push_back(d.origin[c]);
      d.edges.push_back({last, dummy});
      d.origin.push_back(e);
      last = dummy;
      CrossingPair p{e, d.origin[c], permutation};
      if (std::find(out.pairs.begin(), out.pairs.end(), p) == out.pairs.end()) out.pairs.push_back(p);
    }
    d.edges.push_back({last, v});
    d.origin.push_back(e);
  }
  return out;
}

// Boost can hand back a non-minimal obstruction (dangling paths, extra
// edges). Strip leaves, then drop edges greedily while the rest stays
// non-planar; a minimal non-planar edge set is a Kuratowski subdivision.
std::vector<EdgeId> minimize_witness(const Multigraph& g, std::vector<EdgeId> w) {
  auto degrees = [&](const std::vector<EdgeId>& es) {
    std::map<NodeId, std::size_t> deg;
    for (EdgeId e : es) {
      ++deg[g.endpoints(e).a];
      ++deg[g.endpoints(e).b];
    }
    return deg;
  };
  for (bool changed = true; changed;) {
    changed = false;
    const auto deg = degrees(w);
    const auto before = w.size();
    std::erase_if(w, [&](EdgeId e) { return deg.at(g.endpoints(e).a) == 1 || deg.at(g.endpoints(e).b) == 1; });
    changed = w.size() != before;
  }
  std::map<std::size_t, std::size_t> profile;
  for (const auto& [x, d] : degrees(w)) {
    if (d != 2) ++profile[d];
  }
  const bool k5 = profile.size() == 1 && profile.count(4) != 0 && profile[4] == 5;
  const bool k33 = profile.size() == 1 && profile.count(3) != 0 && profile[3] == 6;
  if (k5 || k33) return w;
  auto planar_without = [&](std::size_t skip) {
    std::vector<Endpoints> es;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != skip) es.push_back(g.endpoints(w[i]));
    }
    return planar_edges(g.node_count(), es);
  };
  for (std::size_t i = 0; i < w.size();) {
    if (planar_without(i)) {
      ++i;
    } else {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return w;
}

}  // namespace

PlanarityResult is_planar(const Multigraph& g) {
  std::vector<EdgeId> kept;
  BoostGraph bg = to_boost(g.node_count(), g.edges(), kept);
  std::vector<BoostEdge> witness;
  PlanarityResult r;
  r.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                 boost::boyer_myrvold_params::kuratowski_subgraph =
                                                     std::back_inserter(witness));
  if (!r.planar) {
    for (const auto& e : witness) r.witness.push_back(kept[static_cast<std::size_t>(boost::get(boost::edge_index, bg, e))]);
    std::sort(r.witness.begin(), r.witness.end());
    r.witness = minimize_witness(g, std::move(r.witness));
  }
  return r;
}

bool is_zykov_planar(const Hypergraph& h) { return is_planar(build_bipartite(h).graph()).planar; }

bool is_convex_polygon_planar(const Hypergraph& h) { return is_zykov_planar(h) && !has_forbidden(h); }

ContractedBlock contract_clusters(const Multigraph& g, const TopologicalBlock& block,
                                  const std::vector<ForbiddenCluster>& clusters) {
  // Group clusters whose node sets overlap.
  std::vector<std::size_t> group(clusters.size());
  std::iota(group.begin(), group.end(), 0);
  auto find = [&](std::size_t x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  std::map<NodeId, std::size_t> owner;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (NodeId x : clusters[c].nodes) {
      auto [it, fresh] = owner.emplace(x, c);
      if (!fresh) {
        std::size_t a = find(it->second), b = find(c);
        if (a != b) group[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  ContractedBlock out;
  std::map<std::size_t, NodeId> super_of_group;
  std::map<NodeId, NodeId> local;
  for (NodeId x : block.nodes) {
    auto it = owner.find(x);
    if (it == owner.end()) {
      local[x] = static_cast<NodeId>(out.original_node.size());
      out.original_node.push_back(x);
      out.super_clusters.emplace_back();
      continue;
    }
    std::size_t grp = find(it->second);
    auto [s, fresh] = super_of_group.emplace(grp, static_cast<NodeId>(out.original_node.size()));
    if (fresh) {
      out.original_node.push_back(kNoNode);
      out.super_clusters.emplace_back();
    }
    local[x] = s->second;
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    out.super_clusters[super_of_group.at(find(c))].push_back(c);
  }
  std::map<std::pair<NodeId, NodeId>, std::size_t> edge_of;
  std::vector<Endpoints> ends;
  for (EdgeId e : block.edges) {
    NodeId a = local.at(g.endpoints(e).a), b = local.at(g.endpoints(e).b);
    if (a == b) continue;
    auto key = std::minmax(a, b);
    auto [it, fresh] = edge_of.emplace(key, ends.size());
    if (fresh) {
      ends.push_back({key.first, key.second});
      out.edge_origin.push_back(e);
      out.edge_members.push_back({e});
    } else {
      out.edge_members[it->second].push_back(e);
    }
  }
  out.graph = Multigraph(out.original_node.size(), std::move(ends));
  return out;
}

std::vector<CrossingPair> find_crossings(const Multigraph& g, const CrossingOptions& options) {
  if (is_planar(g).planar) return {};
  auto betweenness = edge_betweenness(g);
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId l, EdgeId r) { return betweenness[l] > betweenness[r]; });

  std::vector<Endpoints> accepted_ends;
  std::vector<EdgeId> accepted, rejected;
  std::map<std::pair<NodeId, NodeId>, bool> present;
  for (EdgeId e : order) {
    auto key = std::minmax(g.endpoints(e).a, g.endpoints(e).b);
    if (present.count(key) != 0) continue;  // parallel copy, never crosses anything new
    accepted_ends.push_back(g.endpoints(e));
    if (planar_edges(g.node_count(), accepted_ends)) {
      accepted.push_back(e);
      present.emplace(key, true);
    } else {
      accepted_ends.pop_back();
      rejected.push_back(e);
    }
  }

  Attempt best;
  bool have_best = false;
  for (std::size_t p = 0; p < std::max<std::size_t>(1, options.permutations); ++p) {
    std::vector<EdgeId> trial = rejected;
    if (p > 0) {
      std::mt19937_64 rng(options.seed + p);
      for (std::size_t i = trial.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(trial[i - 1], trial[j]);
      }
    }
    Attempt a = insert_all(g, accepted, trial, p);
    if (!have_best || a.crossings < best.crossings) {
      best = std::move(a);
      have_best = true;
    }
  }
  return best.pairs;
}

}  // namespace hypersimp
