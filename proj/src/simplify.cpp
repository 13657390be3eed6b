#include "hypersimp/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gf2.hpp"

namespace hypersimp {

namespace {

using EdgeKey = std::pair<std::string, std::string>;

bool cycle_has(const IdCycle& c, const std::string& x) { return std::find(c.begin(), c.end(), x) != c.end(); }

bool cycle_has_edge(const IdCycle& c, const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& p = c[i];
    const auto& q = c[(i + 1) % c.size()];
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

IdCycle sorted_nodes(IdCycle c) {
  std::sort(c.begin(), c.end());
  return c;
}

bool op_before(const SimplificationOp& l, const SimplificationOp& r) {
  if (l.priority != r.priority) return l.priority > r.priority;
  if (kind_rank(l.kind) != kind_rank(r.kind)) return kind_rank(l.kind) < kind_rank(r.kind);
  if (l.first != r.first) return l.first < r.first;
  if (l.second != r.second) return l.second < r.second;
  return l.cycle < r.cycle;
}

std::vector<std::string> neighbours(const Hypergraph& h, const std::string& x) {
  if (h.has_vertex(x)) return h.incident_hyperedges(x);
  const auto& m = h.members(x);
  return {m.begin(), m.end()};
}

// The hypergraph edit behind an op; shared by the working state and replay.
// Returns hyperedges deleted because they became empty.
std::vector<std::string> mutate(Hypergraph& h, const SimplificationOp& op) {
  std::vector<std::string> cascade;
  switch (op.kind) {
    case OpKind::MinimalCycleCollapse:
      if (h.has_vertex(op.first)) {
        h.merge_vertices(op.first, op.second, op.merged_id);
      } else {
        h.merge_hyperedges(op.first, op.second, op.merged_id);
      }
      break;
    case OpKind::CycleEdgeCut:
      h.remove_incidence(op.first, op.second);
      if (h.members(op.second).empty()) {
        h.erase_hyperedge(op.second);
        cascade.push_back(op.second);
      }
      break;
    case OpKind::LeafPrune:
      if (h.has_vertex(op.first)) {
        auto around = h.incident_hyperedges(op.first);
        h.erase_vertex(op.first);
        for (const auto& e : around) {
          if (h.members(e).empty()) {
            h.erase_hyperedge(e);
            cascade.push_back(e);
          }
        }
      } else {
        if (!h.has_hyperedge(op.first)) throw ValidationError(op.first, "no such element '" + op.first + "'");
        h.erase_hyperedge(op.first);
      }
      break;
  }
  return cascade;
}

IdCycle to_ids(const BipartiteGraph& g, const Cycle& c) {
  IdCycle out;
  out.reserve(c.nodes.size());
  for (NodeId x : c.nodes) out.push_back(g.id(x));
  return out;
}

}  // namespace

std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::MinimalCycleCollapse: return "collapse";
    case OpKind::CycleEdgeCut: return "cut";
    case OpKind::LeafPrune: return "prune";
  }
  return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view name) {
  for (OpKind k : {OpKind::MinimalCycleCollapse, OpKind::CycleEdgeCut, OpKind::LeafPrune}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

int kind_rank(OpKind k) { return static_cast<int>(k); }

void PriorityParams::validate() const {
  for (double w : {alpha, beta, gamma, delta}) {
    if (!(w >= 0) || !std::isfinite(w)) throw std::invalid_argument("priority weights must be finite and >= 0");
  }
  if (!(eta_threshold >= 0)) throw std::invalid_argument("eta threshold must be >= 0");
  if (std::isnan(prune_threshold)) throw std::invalid_argument("prune threshold is NaN");
  if (!target.planar && !target.eta && !target.op_budget) {
    throw std::invalid_argument("at least one simplification target is required");
  }
}

double priority(const PriorityTerms& t, const PriorityParams& p) {
  return p.alpha * t.stat + p.beta * t.adj + p.gamma * t.btw + p.delta * t.topo;
}

SimplificationState::SimplificationState(Hypergraph h, PriorityParams params)
    : h_(std::move(h)), params_(params) {
  h_.validate();
  refresh();
}

void SimplificationState::notice(std::string text) { log_.notices.push_back(std::move(text)); }

void SimplificationState::rebuild_graph() { g_ = build_bipartite(h_); }

void SimplificationState::refresh() {
  rebuild_graph();
  DecompositionOptions opts;
  opts.jobs = params_.jobs;
  decomp_ = topological_decomposition(g_, opts);
  forbidden_ = analyze_forbidden(g_, decomp_);
  basis_.clear();
  for (const auto& b : decomp_.blocks) {
    for (const auto& c : b.basis) basis_.push_back(to_ids(g_, c));
  }
  block_names_.clear();
}

void SimplificationState::recompute_basis() {
  DecompositionOptions opts;
  opts.jobs = params_.jobs;
  auto d = topological_decomposition(g_, opts);
  basis_.clear();
  for (const auto& b : d.blocks) {
    for (const auto& c : b.basis) basis_.push_back(to_ids(g_, c));
  }
}

bool SimplificationState::basis_valid() const {
  if (static_cast<std::int64_t>(basis_.size()) != betti_numbers(g_.graph()).b1) return false;
  detail::Gf2Span span(g_.edge_count(), basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& c = basis_[i];
    if (c.size() < 4 || c.size() % 2 != 0) return false;
    if (sorted_nodes(c) != [&] {
          auto u = sorted_nodes(c);
          u.erase(std::unique(u.begin(), u.end()), u.end());
          return u;
        }()) {
      return false;
    }
    detail::BitVector bits(g_.edge_count());
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto a = g_.find(c[k]);
      auto b = g_.find(c[(k + 1) % c.size()]);
      if (!a || !b) return false;
      auto e = g_.find_edge(*a, *b);
      if (!e) return false;
      bits.flip(*e);
    }
    if (!span.insert(std::move(bits), i)) return false;
  }
  return true;
}

std::string SimplificationState::resolve(const std::string& id) const {
  std::string cur = id;
  for (auto it = renamed_.find(cur); it != renamed_.end(); it = renamed_.find(cur)) cur = it->second;
  return cur;
}

std::vector<std::string> SimplificationState::members_of(const std::string& id) const {
  auto it = log_.genealogy.find(id);
  if (it != log_.genealogy.end()) return it->second;
  return {id};
}

std::string SimplificationState::block_name(std::uint32_t b) const {
  auto it = block_names_.find(b);
  return it != block_names_.end() ? it->second : "block:" + std::to_string(b);
}

SimplificationState::Context SimplificationState::make_context(std::span<const NodeId> nodes,
                                                               std::span<const EdgeId> edges) const {
  Context ctx;
  Subgraph sub = induced_by_edges(g_.graph(), {edges.begin(), edges.end()});
  auto bc = node_betweenness(sub.graph);
  const double n = static_cast<double>(sub.graph.node_count());
  const double norm = n >= 3 ? (n - 1) * (n - 2) / 2 : 0;
  for (NodeId x : nodes) ctx.btw[g_.id(x)] = 0;
  for (NodeId x = 0; x < sub.graph.node_count(); ++x) {
    ctx.btw[g_.id(sub.node_to_parent[x])] = norm > 0 ? bc[x] / norm : 0;
  }
  // Midrank percentile of degree among same-role nodes of the structure.
  for (NodeRole role : {NodeRole::Primal, NodeRole::Dual}) {
    std::vector<std::size_t> degs;
    for (NodeId x : nodes) {
      if (g_.role(x) == role) degs.push_back(g_.graph().degree(x));
    }
    std::sort(degs.begin(), degs.end());
    for (NodeId x : nodes) {
      if (g_.role(x) != role) continue;
      const std::size_t d = g_.graph().degree(x);
      auto lo = std::lower_bound(degs.begin(), degs.end(), d);
      auto hi = std::upper_bound(degs.begin(), degs.end(), d);
      const double less = static_cast<double>(lo - degs.begin());
      const double equal = static_cast<double>(hi - lo);
      ctx.pct[g_.id(x)] = (less + 0.5 * equal) / static_cast<double>(degs.size());
    }
  }
  return ctx;
}

SimplificationState::Context SimplificationState::tree_context(std::uint32_t t) const {
  const auto& tree = decomp_.trees.at(t);
  Context ctx = make_context(tree.nodes, tree.edges);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& id = g_.id(tree.nodes[i]);
    ctx.low[id] = tree.low[i];
    ctx.anchor[id] = tree.anchor[i] == kNoNode ? id : g_.id(tree.anchor[i]);
  }
  for (const auto& r : tree.roots) ctx.roots.insert(g_.id(r.node));
  return ctx;
}

double SimplificationState::adjacency_raw(const SimplificationOp& op) const {
  switch (op.kind) {
    case OpKind::MinimalCycleCollapse: {
      auto a = neighbours(h_, op.first), b = neighbours(h_, op.second);
      std::vector<std::string> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      return static_cast<double>(both.size());
    }
    case OpKind::CycleEdgeCut: {
      const auto& e_members = h_.members(op.second);
      std::size_t count = 0;
      for (const auto& f : h_.incident_hyperedges(op.first)) {
        if (f == op.second) continue;
        for (const auto& w : h_.members(f)) {
          if (w != op.first && e_members.count(w) != 0) {
            ++count;
            break;
          }
        }
      }
      return static_cast<double>(count);
    }
    case OpKind::LeafPrune:
      return 0;
  }
  return 0;
}

void SimplificationState::score(SimplificationOp& op, const Context& ctx, double adj_max) const {
  std::vector<std::string> operands{op.first};
  if (op.kind != OpKind::LeafPrune) operands.push_back(op.second);
  double pct = 0, btw = 0;
  for (const auto& x : operands) {
    auto p = ctx.pct.find(x);
    auto b = ctx.btw.find(x);
    pct += p != ctx.pct.end() ? p->second : 0;
    btw += b != ctx.btw.end() ? b->second : 0;
  }
  const double k = static_cast<double>(operands.size());
  op.terms.stat = 1 - pct / k;
  op.terms.btw = 1 - btw / k;
  op.terms.adj = adj_max > 0 ? adjacency_raw(op) / adj_max : 0;

  if (op.kind == OpKind::LeafPrune) {
    const std::uint32_t low_x = ctx.low.at(op.first);
    const std::uint32_t low_r = ctx.low.at(ctx.anchor.at(op.first));
    op.terms.topo = low_r > 0 ? 1 - static_cast<double>(low_x) / static_cast<double>(low_r) : 0;
  } else {
    std::size_t s = 0, with_both = 0, total_len = 0;
    for (const auto& c : basis_) {
      const bool both = cycle_has(c, op.first) && cycle_has(c, op.second);
      if (both) {
        ++with_both;
        total_len += c.size();
      }
      if (op.kind == OpKind::MinimalCycleCollapse ? (both && c.size() == 4)
                                                  : cycle_has_edge(c, op.first, op.second)) {
        ++s;
      }
    }
    if (s == 0 || with_both == 0) {
      throw std::logic_error("candidate (" + op.first + ", " + op.second + ") lies on no basis cycle");
    }
    const double l = static_cast<double>(total_len) / static_cast<double>(with_both);
    op.terms.topo = 1.0 / static_cast<double>(s) + 1.0 / l;
  }
  op.priority = priority(op.terms, params_);
}

std::vector<SimplificationOp> SimplificationState::candidate_collapses(std::uint32_t b) const {
  const auto& block = decomp_.blocks.at(b);
  const auto& fb = forbidden_.at(b);
  std::vector<SimplificationOp> out;
  if (fb.records.empty()) return out;
  std::set<std::pair<IdCycle, EdgeKey>> seen;
  for (std::size_t ri = 0; ri < fb.records.size(); ++ri) {
    for (std::size_t ci : fb.records[ri].cycles) {
      IdCycle ids = to_ids(g_, block.basis[ci]);
      for (std::size_t k = 0; k < 2; ++k) {
        auto pair = std::minmax(ids[k], ids[k + 2]);
        EdgeKey key{pair.first, pair.second};
        if (!seen.emplace(sorted_nodes(ids), key).second) continue;
        SimplificationOp op;
        op.kind = OpKind::MinimalCycleCollapse;
        op.first = key.first;
        op.second = key.second;
        op.cycle = ids;
        op.structure = block_name(b);
        op.provenance = "record " + std::to_string(ri) + " cycle " + std::to_string(ci);
        out.push_back(std::move(op));
      }
    }
  }
  Context ctx = make_context(block.nodes, block.edges);
  double adj_max = 0;
  for (const auto& op : out) adj_max = std::max(adj_max, adjacency_raw(op));
  for (auto& op : out) score(op, ctx, adj_max);
  std::sort(out.begin(), out.end(), op_before);
  return out;
}

std::vector<SimplificationOp> SimplificationState::candidate_cuts(std::uint32_t b) const {
  const auto& block = decomp_.blocks.at(b);
  CrossingOptions copts{params_.seed, params_.crossing_permutations};
  ContractedBlock t = contract_clusters(g_.graph(), block, forbidden_.at(b).clusters);
  auto crossings = find_crossings(t.graph, copts);
  if (crossings.empty()) {
    Subgraph sub = induced_by_edges(g_.graph(), block.edges);
    if (is_planar(sub.graph).planar) return {};
    t = ContractedBlock{sub.graph, sub.node_to_parent, {}, sub.edge_to_parent, {}};
    crossings = find_crossings(t.graph, copts);
  }
  return candidate_cuts(b, t, crossings);
}

std::vector<SimplificationOp> SimplificationState::candidate_cuts(std::uint32_t b, const ContractedBlock& contracted,
                                                                  const std::vector<CrossingPair>& crossings) const {
  const auto& block = decomp_.blocks.at(b);
  std::vector<SimplificationOp> out;
  std::set<EdgeKey> seen;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (EdgeId te : {crossings[i].first, crossings[i].second}) {
      const EdgeId e = contracted.edge_origin.at(te);
      EdgeKey key{g_.id(g_.primal_end(e)), g_.id(g_.dual_end(e))};
      if (!seen.insert(key).second) continue;
      SimplificationOp op;
      op.kind = OpKind::CycleEdgeCut;
      op.first = key.first;
      op.second = key.second;
      op.structure = block_name(b);
      op.provenance = "crossing " + std::to_string(i);
      out.push_back(std::move(op));
    }
  }
  if (out.empty()) return out;
  Context ctx = make_context(block.nodes, block.edges);
  double adj_max = 0;
  for (const auto& op : out) adj_max = std::max(adj_max, adjacency_raw(op));
  for (auto& op : out) score(op, ctx, adj_max);
  std::sort(out.begin(), out.end(), op_before);
  return out;
}

std::optional<SimplificationOp> SimplificationState::prune_op(const std::string& leaf, const Context& ctx,
                                                              const std::string& structure) const {
  if (ctx.roots.count(leaf) != 0 || ctx.low.count(leaf) == 0) return std::nullopt;
  auto x = g_.find(leaf);
  if (!x || g_.graph().degree(*x) != 1) return std::nullopt;
  const NodeId y = g_.graph().incident(*x)[0].neighbor;
  if (g_.role(*x) == NodeRole::Primal && g_.graph().degree(y) == 1) return std::nullopt;
  SimplificationOp op;
  op.kind = OpKind::LeafPrune;
  op.first = leaf;
  op.second = g_.id(y);
  op.structure = structure;
  op.provenance = "leaf";
  score(op, ctx, 0);
  return op;
}

std::vector<SimplificationOp> SimplificationState::candidate_prunes(std::uint32_t t) const {
  const auto& tree = decomp_.trees.at(t);
  std::vector<SimplificationOp> out;
  if (tree.edges.empty()) return out;
  Context ctx = tree_context(t);
  for (NodeId x : tree.nodes) {
    if (auto op = prune_op(g_.id(x), ctx, "tree:" + std::to_string(t))) out.push_back(std::move(*op));
  }
  std::sort(out.begin(), out.end(), op_before);
  return out;
}

bool SimplificationState::apply(SimplificationOp op) {
  switch (op.kind) {
    case OpKind::MinimalCycleCollapse: return apply_collapse(std::move(op));
    case OpKind::CycleEdgeCut: return apply_cut(std::move(op));
    case OpKind::LeafPrune: return apply_prune(std::move(op));
  }
  return false;
}

bool SimplificationState::apply_collapse(SimplificationOp op) {
  const std::string x1 = op.first, x2 = op.second;
  const bool vertices = h_.has_vertex(x1) && h_.has_vertex(x2);
  const bool hyperedges = h_.has_hyperedge(x1) && h_.has_hyperedge(x2);
  const IdCycle target = sorted_nodes(op.cycle);
  const bool on_basis = std::any_of(basis_.begin(), basis_.end(), [&](const IdCycle& c) {
    return c.size() == 4 && sorted_nodes(c) == target;
  });
  if (x1 == x2 || !(vertices || hyperedges) || op.cycle.size() != 4 || !on_basis || !cycle_has(op.cycle, x1) ||
      !cycle_has(op.cycle, x2)) {
    notice("skipped stale collapse (" + x1 + ", " + x2 + ")");
    return false;
  }
  auto n1 = neighbours(h_, x1), n2 = neighbours(h_, x2);
  std::vector<std::string> common;
  std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(common));

  // Realign: make the basis hold c - 1 independent 4-cycles through the pair,
  // so that the pair's minimal basis cycles account for the whole B1 drop.
  auto edge_bits = [&](const IdCycle& c) {
    detail::BitVector bits(g_.edge_count());
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto e = g_.find_edge(*g_.find(c[k]), *g_.find(c[(k + 1) % c.size()]));
      if (!e) throw std::logic_error("basis cycle uses a missing edge");
      bits.flip(*e);
    }
    return bits;
  };
  auto pair_cycle = [&](const IdCycle& c) { return c.size() == 4 && cycle_has(c, x1) && cycle_has(c, x2); };
  std::vector<std::size_t> pair_idx;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (pair_cycle(basis_[i])) pair_idx.push_back(i);
  }
  for (std::size_t j = 1; j < common.size(); ++j) {
    IdCycle z{x1, common[0], x2, common[j]};
    detail::Gf2Span mine(g_.edge_count(), basis_.size());
    for (std::size_t i : pair_idx) mine.insert(edge_bits(basis_[i]), i);
    if (mine.contains(edge_bits(z))) continue;
    detail::Gf2Span all(g_.edge_count(), basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) all.insert(edge_bits(basis_[i]), i);
    auto combo = all.represent(edge_bits(z));
    if (!combo) throw std::logic_error("basis does not span a 4-cycle of the graph");
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!combo->test(i) || std::find(pair_idx.begin(), pair_idx.end(), i) != pair_idx.end()) continue;
      if (!pick || basis_[i].size() > basis_[*pick].size()) pick = i;
    }
    if (!pick) throw std::logic_error("no exchangeable basis cycle during collapse realignment");
    basis_[*pick] = z;
    pair_idx.push_back(*pick);
  }
  std::sort(pair_idx.begin(), pair_idx.end());

  op.predicted_b1 = -static_cast<std::int64_t>(pair_idx.size());
  op.predicted_b0 = 0;
  op.before = betti_numbers(g_.graph());

  std::vector<std::string> members = members_of(x1);
  for (auto& m : members_of(x2)) members.push_back(std::move(m));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::string merged;
  for (const auto& m : members) merged += (merged.empty() ? "" : "+") + m;
  if (h_.contains(merged)) {
    std::size_t n = 2;
    while (h_.contains(merged + "#" + std::to_string(n))) ++n;
    merged += "#" + std::to_string(n);
  }
  op.merged_id = merged;
  op.cascade = mutate(h_, op);
  renamed_[x1] = merged;
  renamed_[x2] = merged;
  log_.genealogy[merged] = members;
  rebuild_graph();

  // Drop the pair's cycles, rename the rest, shorten cycles through both.
  std::vector<IdCycle> next;
  bool broken = false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (std::binary_search(pair_idx.begin(), pair_idx.end(), i)) continue;
    IdCycle c = basis_[i];
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == x1 || c[k] == x2) {
        c[k] = merged;
        at.push_back(k);
      }
    }
    if (at.size() == 2) {
      const std::size_t n = c.size(), p = at[0], q = at[1];
      std::vector<std::size_t> drop;
      if (q - p == 2) {
        drop = {p + 1, q};
      } else if (p + n - q == 2) {
        drop = {q, (q + 1) % n};
      } else {
        broken = true;
      }
      std::sort(drop.rbegin(), drop.rend());
      for (std::size_t k : drop) c.erase(c.begin() + static_cast<std::ptrdiff_t>(k));
    }
    next.push_back(std::move(c));
  }
  basis_ = std::move(next);
  if (params_.full_recompute) {
    recompute_basis();
  } else if (broken || !basis_valid()) {
    recompute_basis();
    op.basis_recomputed = true;
  }
  op.after = betti_numbers(g_.graph());
  log_.ops.push_back(std::move(op));
  return true;
}

bool SimplificationState::apply_cut(SimplificationOp op) {
  const std::string v = op.first, e = op.second;
  if (!h_.has_vertex(v) || !h_.has_hyperedge(e) || h_.members(e).count(v) == 0) {
    notice("skipped stale cut (" + v + ", " + e + ")");
    return false;
  }
  std::vector<std::size_t> holders;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (cycle_has_edge(basis_[i], v, e)) holders.push_back(i);
  }
  if (holders.empty()) {
    notice("rejected cut (" + v + ", " + e + "): incidence lies on no cycle");
    return false;
  }
  const std::size_t gone = *std::min_element(holders.begin(), holders.end(), [&](std::size_t l, std::size_t r) {
    return basis_[l].size() != basis_[r].size() ? basis_[l].size() < basis_[r].size() : l < r;
  });
  op.predicted_b1 = -1;
  op.predicted_b0 = 0;
  op.before = betti_numbers(g_.graph());
  op.cascade = mutate(h_, op);
  rebuild_graph();

  // Replace the cut edge with the new shortest path in every other holder.
  const NodeId nv = *g_.find(v), ne = *g_.find(e);
  std::vector<std::string> path{v};
  NodeId at = nv;
  for (EdgeId pe : shortest_path(g_.graph(), nv, ne)) {
    at = g_.graph().opposite(pe, at);
    path.push_back(g_.id(at));
  }
  bool broken = path.size() < 2 || path.back() != e;
  std::vector<IdCycle> next;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i == gone) continue;
    IdCycle c = basis_[i];
    if (!broken && cycle_has_edge(c, v, e)) {
      const std::size_t n = c.size();
      std::size_t p = 0;
      while (!((c[p] == v && c[(p + 1) % n] == e) || (c[p] == e && c[(p + 1) % n] == v))) ++p;
      IdCycle r;
      for (std::size_t k = 1; k <= n; ++k) r.push_back(c[(p + k) % n]);
      // r runs from one endpoint round to the other; close it with the path.
      std::vector<std::string> inner(path.begin() + 1, path.end() - 1);
      if (r.back() != v) std::reverse(inner.begin(), inner.end());
      r.insert(r.end(), inner.begin(), inner.end());
      c = std::move(r);
    }
    next.push_back(std::move(c));
  }
  basis_ = std::move(next);
  if (params_.full_recompute) {
    recompute_basis();
  } else if (broken || !basis_valid()) {
    recompute_basis();
    op.basis_recomputed = true;
  }
  log_.annotations.push_back({v, e});
  op.after = betti_numbers(g_.graph());
  log_.ops.push_back(std::move(op));
  return true;
}

bool SimplificationState::apply_prune(SimplificationOp op) {
  auto x = g_.find(op.first);
  if (!x || g_.graph().degree(*x) != 1 || g_.id(g_.graph().incident(*x)[0].neighbor) != op.second) {
    notice("skipped stale prune (" + op.first + ")");
    return false;
  }
  const NodeId y = g_.graph().incident(*x)[0].neighbor;
  op.predicted_b1 = 0;
  op.predicted_b0 = g_.role(*x) == NodeRole::Primal && g_.graph().degree(y) == 1 ? -1 : 0;
  op.before = betti_numbers(g_.graph());
  op.cascade = mutate(h_, op);
  if (!op.cascade.empty()) notice("prune of " + op.first + " emptied and removed " + op.cascade.front());
  rebuild_graph();
  if (params_.full_recompute) recompute_basis();
  op.after = betti_numbers(g_.graph());
  log_.ops.push_back(std::move(op));
  return true;
}

SimplifyResult simplify(const Hypergraph& h, const PriorityParams& params) {
  params.validate();
  SimplificationState st(h, params);
  const auto budget_left = [&] {
    return !params.target.op_budget || st.log_.ops.size() < *params.target.op_budget;
  };
  const auto edge_key = [&](EdgeId e) { return EdgeKey{st.g_.id(st.g_.primal_end(e)), st.g_.id(st.g_.dual_end(e))}; };

  struct Scope {
    std::string name;
    std::set<EdgeKey> keys;
    Rational eta;
    std::uint32_t block;
  };
  std::vector<Scope> scopes;
  for (const auto& b : st.decomp_.blocks) {
    Scope s{"block:" + std::to_string(b.id), {}, b.entanglement, b.id};
    for (EdgeId e : b.edges) s.keys.insert(edge_key(e));
    scopes.push_back(std::move(s));
  }
  std::stable_sort(scopes.begin(), scopes.end(), [](const Scope& l, const Scope& r) { return l.eta > r.eta; });

  std::uint32_t epoch = 0;
  std::size_t fresh_at = 0;
  for (const auto& scope : scopes) {
    while (budget_left()) {
      if (st.log_.ops.size() != fresh_at) {
        st.refresh();
        fresh_at = st.log_.ops.size();
      }
      std::set<EdgeKey> mapped;
      for (const auto& [a, b] : scope.keys) mapped.emplace(st.resolve(a), st.resolve(b));

      std::optional<std::uint32_t> pick;
      for (const auto& b : st.decomp_.blocks) {
        if (mapped.count(edge_key(b.edges.front())) == 0) continue;
        const bool planar = st.forbidden_[b.id].records.empty() &&
                            is_planar(induced_by_edges(st.g_.graph(), b.edges).graph).planar;
        const bool eta_met = params.target.eta && b.entanglement.value() <= params.eta_threshold;
        if (planar || eta_met) continue;
        if (!pick || b.entanglement > st.decomp_.blocks[*pick].entanglement) pick = b.id;
      }
      if (!pick) break;
      st.set_block_name(*pick, scope.name);
      st.log_.eta_trace.push_back({scope.name, st.log_.ops.size(), st.decomp_.blocks[*pick].entanglement});
      ++epoch;
      // With an eta target every op is followed by a fresh look at the block.
      const std::size_t round_cap = params.target.eta ? 1 : static_cast<std::size_t>(-1);
      std::size_t applied = 0;

      const auto& records = st.forbidden_[*pick].records;
      if (!records.empty()) {
        auto cands = st.candidate_collapses(*pick);
        const auto& block = st.decomp_.blocks[*pick];
        std::vector<std::set<IdCycle>> record_cycles;
        std::map<IdCycle, std::vector<std::size_t>> cycle_records;
        for (std::size_t ri = 0; ri < records.size(); ++ri) {
          record_cycles.emplace_back();
          for (std::size_t ci : records[ri].cycles) {
            IdCycle key = sorted_nodes(to_ids(st.g_, block.basis[ci]));
            record_cycles.back().insert(key);
            cycle_records[key].push_back(ri);
          }
        }
        std::vector<bool> simplified(records.size(), false);
        std::set<IdCycle> dropped;
        for (auto& op : cands) {
          if (!budget_left() || applied >= round_cap) break;
          IdCycle key = sorted_nodes(op.cycle);
          if (dropped.count(key) != 0) continue;
          op.epoch = epoch;
          if (!st.apply_collapse(op)) continue;
          ++applied;
          dropped.insert(key);
          for (std::size_t ri : cycle_records[key]) simplified[ri] = true;
          for (std::size_t ri : cycle_records[key]) {
            for (const auto& other : record_cycles[ri]) {
              const auto& owners = cycle_records[other];
              if (std::none_of(owners.begin(), owners.end(), [&](std::size_t r) { return !simplified[r]; })) {
                dropped.insert(other);
              }
            }
          }
        }
      } else {
        CrossingOptions copts{params.seed, params.crossing_permutations};
        const auto& block = st.decomp_.blocks[*pick];
        ContractedBlock t = contract_clusters(st.g_.graph(), block, st.forbidden_[*pick].clusters);
        auto crossings = find_crossings(t.graph, copts);
        if (crossings.empty()) {
          Subgraph sub = induced_by_edges(st.g_.graph(), block.edges);
          t = ContractedBlock{sub.graph, sub.node_to_parent, {}, sub.edge_to_parent, {}};
          crossings = find_crossings(t.graph, copts);
        }
        auto cands = st.candidate_cuts(*pick, t, crossings);
        std::map<EdgeKey, std::set<EdgeKey>> partners;
        for (const auto& c : crossings) {
          EdgeKey a = edge_key(t.edge_origin[c.first]), b = edge_key(t.edge_origin[c.second]);
          partners[a].insert(b);
          partners[b].insert(a);
        }
        std::set<EdgeKey> dropped;
        for (auto& op : cands) {
          if (!budget_left() || applied >= round_cap) break;
          EdgeKey key{op.first, op.second};
          if (dropped.count(key) != 0) continue;
          op.epoch = epoch;
          if (!st.apply_cut(op)) continue;
          ++applied;
          for (const auto& p : partners[key]) dropped.insert(p);
        }
      }
      if (applied == 0) {
        st.notice("no applicable candidate in " + scope.name + "; leaving it unfinished");
        break;
      }
    }
  }

  if (budget_left() && params.prune_threshold < std::numeric_limits<double>::infinity()) {
    st.refresh();
    // Scores and leaf lists are taken before any prune touches the graph.
    std::vector<SimplificationState::Context> contexts;
    std::vector<std::vector<SimplificationOp>> queues;
    for (const auto& tree : st.decomp_.trees) {
      contexts.push_back(tree.edges.empty() ? SimplificationState::Context{} : st.tree_context(tree.id));
      queues.emplace_back();
      if (tree.edges.empty()) continue;
      for (NodeId x : tree.nodes) {
        if (auto op = st.prune_op(st.g_.id(x), contexts.back(), "tree:" + std::to_string(tree.id))) {
          queues.back().push_back(std::move(*op));
        }
      }
    }
    for (std::size_t t = 0; t < queues.size() && budget_left(); ++t) {
      const std::string name = "tree:" + std::to_string(t);
      const auto& ctx = contexts[t];
      auto& queue = queues[t];
      ++epoch;
      for (auto& op : queue) op.epoch = epoch;
      while (!queue.empty() && budget_left()) {
        auto best = std::min_element(queue.begin(), queue.end(), op_before);
        if (best->priority < params.prune_threshold) break;
        SimplificationOp op = std::move(*best);
        queue.erase(best);
        const std::string parent = op.second;
        if (!st.apply_prune(op)) continue;
        if (auto next = st.prune_op(parent, ctx, name)) {
          next->epoch = ++epoch;
          queue.push_back(std::move(*next));
        }
      }
    }
  }
  return {st.h_, st.take_log()};
}

Hypergraph replay(const Hypergraph& h, const OpLog& log) {
  Hypergraph out = h;
  for (const auto& op : log.ops) mutate(out, op);
  return out;
}

}  // namespace hypersimp
