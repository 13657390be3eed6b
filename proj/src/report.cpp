#include "hypersimp/report.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "hypersimp/planarity.hpp"

namespace hypersimp {

namespace {

Json ids(const BipartiteGraph& g, std::span<const NodeId> nodes) {
  Json a = Json::array();
  for (NodeId x : nodes) a.push_back(g.id(x));
  return a;
}

Json edge_pair(const BipartiteGraph& g, EdgeId e) { return Json::array({g.id(g.primal_end(e)), g.id(g.dual_end(e))}); }

Json edges_json(const BipartiteGraph& g, std::span<const EdgeId> edges) {
  Json a = Json::array();
  for (EdgeId e : edges) a.push_back(edge_pair(g, e));
  return a;
}

Json rational(const Rational& r) { return Json{{"fraction", r.str()}, {"value", r.value()}}; }

Json betti(const Betti& b) { return Json{{"b0", b.b0}, {"b1", b.b1}}; }

Betti betti_from(const Json& j) { return {j.at("b0").get<std::int64_t>(), j.at("b1").get<std::int64_t>()}; }

Json header(const char* kind) { return Json{{"schema_version", kReportSchemaVersion}, {"report", kind}}; }

}  // namespace

Json decomposition_report(const BipartiteGraph& g, const TopologicalDecomposition& d) {
  Json j = header("decomposition");
  const Betti b = betti_numbers(g.graph());
  j["betti"] = betti(b);
  j["components"] = d.components.count;
  Json blocks = Json::array();
  for (const auto& blk : d.blocks) {
    Json cycles = Json::array();
    for (const auto& c : blk.basis) cycles.push_back(ids(g, c.nodes));
    blocks.push_back(Json{{"id", blk.id},
                          {"nodes", ids(g, blk.nodes)},
                          {"edges", edges_json(g, blk.edges)},
                          {"betti1", blk.betti1},
                          {"entanglement", rational(blk.entanglement)},
                          {"basis", cycles}});
  }
  j["blocks"] = blocks;
  Json trees = Json::array();
  for (const auto& t : d.trees) {
    Json roots = Json::array();
    for (const auto& r : t.roots) {
      roots.push_back(Json{{"node", g.id(r.node)}, {"block", r.block ? Json(*r.block) : Json(nullptr)}});
    }
    Json depth = Json::object();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      depth[g.id(t.nodes[i])] = Json{{"depth", t.depth[i]}, {"low", t.low[i]}};
    }
    trees.push_back(Json{{"id", t.id},
                         {"kind", t.kind == TreeKind::Bridge ? "bridge" : "branch"},
                         {"nodes", ids(g, t.nodes)},
                         {"edges", edges_json(g, t.edges)},
                         {"roots", roots},
                         {"depth", depth}});
  }
  j["trees"] = trees;
  return j;
}

Json forbidden_report(const BipartiteGraph& g, const TopologicalDecomposition& d,
                      const std::vector<BlockForbidden>& f) {
  Json j = header("forbidden");
  Json blocks = Json::array();
  std::size_t total = 0;
  for (const auto& bf : f) {
    const auto& blk = d.blocks.at(bf.block);
    Json clusters = Json::array();
    for (const auto& c : bf.clusters) {
      clusters.push_back(Json{{"cycles", c.cycles}, {"nodes", ids(g, c.nodes)}});
    }
    Json records = Json::array();
    for (const auto& r : bf.records) {
      Json cycles = Json::array();
      for (std::size_t ci : r.cycles) cycles.push_back(ids(g, blk.basis[ci].nodes));
      Json classes = Json::array();
      for (auto c : {ForbiddenClass::NAdjacentBundleOf2, ForbiddenClass::TwoAdjacentBundle,
                     ForbiddenClass::StrangledVertexCycle, ForbiddenClass::StrangledHyperedgeCycle,
                     ForbiddenClass::StrangledVertexStar, ForbiddenClass::StrangledHyperedgeStar}) {
        if (r.has_class(c)) classes.push_back(std::string(to_string(c)));
      }
      Json rec{{"cluster", r.cluster},
               {"class", std::string(to_string(r.cls))},
               {"classes", classes},
               {"order", r.order},
               {"shared", ids(g, r.shared)},
               {"cycles", cycles}};
      if (r.vertex_center) rec["vertex_center"] = g.id(*r.vertex_center);
      if (r.hyperedge_center) rec["hyperedge_center"] = g.id(*r.hyperedge_center);
      records.push_back(std::move(rec));
    }
    total += bf.records.size();
    blocks.push_back(Json{{"block", bf.block}, {"clusters", clusters}, {"records", records}});
  }
  j["record_count"] = total;
  j["blocks"] = blocks;
  return j;
}

Json planarity_report(const Hypergraph& h, std::uint64_t seed) {
  Json j = header("planarity");
  auto g = build_bipartite(h);
  auto d = topological_decomposition(g);
  auto f = analyze_forbidden(g, d);
  auto whole = is_planar(g.graph());
  std::size_t records = 0;
  for (const auto& bf : f) records += bf.records.size();
  j["zykov_planar"] = whole.planar;
  j["convex_polygon_planar"] = whole.planar && records == 0;
  j["forbidden_records"] = records;
  j["kuratowski_witness"] = edges_json(g, whole.witness);
  Json blocks = Json::array();
  for (const auto& blk : d.blocks) {
    Subgraph sub = induced_by_edges(g.graph(), blk.edges);
    if (is_planar(sub.graph).planar) continue;
    ContractedBlock t = contract_clusters(g.graph(), blk, f[blk.id].clusters);
    auto crossings = find_crossings(t.graph, {seed, 10});
    bool on_block = false;
    if (crossings.empty()) {
      t = ContractedBlock{sub.graph, sub.node_to_parent, {}, sub.edge_to_parent, {}};
      crossings = find_crossings(t.graph, {seed, 10});
      on_block = true;
    }
    Json pairs = Json::array();
    for (const auto& c : crossings) {
      pairs.push_back(Json{{"inserted", edge_pair(g, t.edge_origin[c.first])},
                           {"crossed", edge_pair(g, t.edge_origin[c.second])},
                           {"permutation", c.permutation}});
    }
    blocks.push_back(Json{{"block", blk.id},
                          {"contracted_nodes", t.graph.node_count()},
                          {"contracted_edges", t.graph.edge_count()},
                          {"crossings_on", on_block ? "block" : "contracted"},
                          {"crossings", pairs}});
  }
  j["nonplanar_blocks"] = blocks;
  return j;
}

Stats hypergraph_stats(const Hypergraph& h) {
  auto g = build_bipartite(h);
  Stats s;
  s.vertices = h.vertex_count();
  s.hyperedges = h.hyperedge_count();
  s.betti = betti_numbers(g.graph());
  s.eta = g.node_count() == 0 ? Rational{} : entanglement(s.betti.b1, g.node_count());
  return s;
}

Json stats_report(const Hypergraph& h, const TopologicalDecomposition& d) {
  Json j = header("stats");
  const Stats s = hypergraph_stats(h);
  j["vertices"] = s.vertices;
  j["hyperedges"] = s.hyperedges;
  j["betti"] = betti(s.betti);
  j["eta"] = rational(s.eta);
  Json rows = Json::array();
  for (const auto& b : d.blocks) {
    rows.push_back(Json{{"structure", "block:" + std::to_string(b.id)},
                        {"nodes", b.nodes.size()},
                        {"edges", b.edges.size()},
                        {"betti1", b.betti1},
                        {"eta", rational(b.entanglement)}});
  }
  for (const auto& t : d.trees) {
    rows.push_back(Json{{"structure", (t.kind == TreeKind::Bridge ? "bridge:" : "branch:") + std::to_string(t.id)},
                        {"nodes", t.nodes.size()},
                        {"edges", t.edges.size()},
                        {"roots", t.roots.size()}});
  }
  j["structures"] = rows;
  return j;
}

std::string stats_text(const Hypergraph& h, const TopologicalDecomposition& d) {
  const Stats s = hypergraph_stats(h);
  std::string out;
  out += fmt::format("|V| = {}\n|E| = {}\nB0 = {}\nB1 = {}\neta(H) = {} ({:.4f})\n", s.vertices, s.hyperedges,
                     s.betti.b0, s.betti.b1, s.eta.str(), s.eta.value());
  out += fmt::format("\n{:<12} {:>6} {:>6} {:>6} {:>10}\n", "structure", "nodes", "edges", "B1", "eta");
  for (const auto& b : d.blocks) {
    out += fmt::format("{:<12} {:>6} {:>6} {:>6} {:>10}\n", "block:" + std::to_string(b.id), b.nodes.size(),
                       b.edges.size(), b.betti1, b.entanglement.str());
  }
  for (const auto& t : d.trees) {
    out += fmt::format("{:<12} {:>6} {:>6} {:>6} {:>10}\n",
                       (t.kind == TreeKind::Bridge ? "bridge:" : "branch:") + std::to_string(t.id), t.nodes.size(),
                       t.edges.size(), 0, "0");
  }
  return out;
}

Json oplog_to_json(const OpLog& log) {
  Json j = header("oplog");
  Json ops = Json::array();
  for (const auto& op : log.ops) {
    ops.push_back(Json{{"kind", std::string(to_string(op.kind))},
                       {"operands", Json::array({op.first, op.second})},
                       {"cycle", op.cycle},
                       {"structure", op.structure},
                       {"provenance", op.provenance},
                       {"priority", op.priority},
                       {"terms", Json{{"stat", op.terms.stat}, {"adj", op.terms.adj}, {"btw", op.terms.btw},
                                      {"topo", op.terms.topo}}},
                       {"epoch", op.epoch},
                       {"merged_id", op.merged_id},
                       {"cascade", op.cascade},
                       {"predicted", Json{{"b0", op.predicted_b0}, {"b1", op.predicted_b1}}},
                       {"before", betti(op.before)},
                       {"after", betti(op.after)},
                       {"delta_b1", op.after.b1 - op.before.b1},
                       {"basis_recomputed", op.basis_recomputed}});
  }
  j["ops"] = ops;
  j["genealogy"] = log.genealogy;
  Json ann = Json::array();
  for (const auto& a : log.annotations) ann.push_back(Json{{"vertex", a.vertex}, {"hyperedge", a.hyperedge}});
  j["annotations"] = ann;
  Json trace = Json::array();
  for (const auto& s : log.eta_trace) {
    trace.push_back(Json{{"structure", s.structure}, {"at_op", s.at_op}, {"eta", rational(s.eta)}});
  }
  j["eta_trace"] = trace;
  j["notices"] = log.notices;
  return j;
}

OpLog oplog_from_json(const Json& j) {
  try {
    if (j.at("report").get<std::string>() != "oplog") throw std::runtime_error("not an op log");
    OpLog log;
    for (const auto& o : j.at("ops")) {
      SimplificationOp op;
      auto kind = parse_op_kind(o.at("kind").get<std::string>());
      if (!kind) throw std::runtime_error("unknown op kind '" + o.at("kind").get<std::string>() + "'");
      op.kind = *kind;
      op.first = o.at("operands").at(0).get<std::string>();
      op.second = o.at("operands").at(1).get<std::string>();
      op.cycle = o.at("cycle").get<IdCycle>();
      op.structure = o.at("structure").get<std::string>();
      op.provenance = o.at("provenance").get<std::string>();
      op.priority = o.at("priority").get<double>();
      const auto& t = o.at("terms");
      op.terms = {t.at("stat").get<double>(), t.at("adj").get<double>(), t.at("btw").get<double>(),
                  t.at("topo").get<double>()};
      op.epoch = o.at("epoch").get<std::uint32_t>();
      op.merged_id = o.at("merged_id").get<std::string>();
      op.cascade = o.at("cascade").get<std::vector<std::string>>();
      op.predicted_b0 = o.at("predicted").at("b0").get<std::int64_t>();
      op.predicted_b1 = o.at("predicted").at("b1").get<std::int64_t>();
      op.before = betti_from(o.at("before"));
      op.after = betti_from(o.at("after"));
      op.basis_recomputed = o.at("basis_recomputed").get<bool>();
      log.ops.push_back(std::move(op));
    }
    log.genealogy = j.at("genealogy").get<std::map<std::string, std::vector<std::string>>>();
    for (const auto& a : j.at("annotations")) {
      log.annotations.push_back({a.at("vertex").get<std::string>(), a.at("hyperedge").get<std::string>()});
    }
    for (const auto& s : j.at("eta_trace")) {
      const auto frac = s.at("eta").at("fraction").get<std::string>();
      const auto slash = frac.find('/');
      Rational r = slash == std::string::npos
                       ? Rational::make(std::stoll(frac), 1)
                       : Rational::make(std::stoll(frac.substr(0, slash)), std::stoll(frac.substr(slash + 1)));
      log.eta_trace.push_back({s.at("structure").get<std::string>(), s.at("at_op").get<std::size_t>(), r});
    }
    log.notices = j.at("notices").get<std::vector<std::string>>();
    return log;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed op log: ") + e.what());
  }
}

}  // namespace hypersimp
