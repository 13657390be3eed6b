#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/decomposition.hpp"
#include "hypersimp/fixtures.hpp"
#include "hypersimp/planarity.hpp"
#include "hypersimp/simplify.hpp"
#include "support/oracles.hpp"

using namespace hypersimp;

namespace {

PriorityParams topo_only() {
  PriorityParams p;
  p.alpha = p.beta = p.gamma = 0;
  p.delta = 1;
  return p;
}

IdCycle basis_cycle_with(const SimplificationState& st, std::initializer_list<std::string> ids) {
  for (const auto& c : st.basis()) {
    if (c.size() == 4 && std::all_of(ids.begin(), ids.end(), [&](const std::string& x) {
          return std::find(c.begin(), c.end(), x) != c.end();
        })) {
      return c;
    }
  }
  FAIL("no basis cycle through the given ids");
  return {};
}

SimplificationOp collapse(const SimplificationState& st, const std::string& a, const std::string& b,
                          std::initializer_list<std::string> cycle_ids) {
  SimplificationOp op;
  op.kind = OpKind::MinimalCycleCollapse;
  op.first = std::min(a, b);
  op.second = std::max(a, b);
  op.cycle = basis_cycle_with(st, cycle_ids);
  return op;
}

SimplificationOp cut(const std::string& v, const std::string& e) {
  SimplificationOp op;
  op.kind = OpKind::CycleEdgeCut;
  op.first = v;
  op.second = e;
  return op;
}

SimplificationOp prune(const std::string& leaf, const std::string& parent) {
  SimplificationOp op;
  op.kind = OpKind::LeafPrune;
  op.first = leaf;
  op.second = parent;
  return op;
}

std::int64_t b1(const SimplificationState& st) { return betti_numbers(st.graph().graph()).b1; }

std::uint32_t tree_with(const SimplificationState& st, const std::string& id) {
  const NodeId x = *st.graph().find(id);
  const auto& trees = st.decomposition().trees;
  for (std::uint32_t t = 0; t < trees.size(); ++t) {
    if (std::binary_search(trees[t].nodes.begin(), trees[t].nodes.end(), x) && !trees[t].is_root(x)) return t;
  }
  FAIL("no tree holds " << id);
  return 0;
}

// Subdivided K5: five vertices, one 2-element hyperedge per pair.
Hypergraph subdivided_k5() {
  std::map<std::string, std::vector<std::string>> inc;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      inc["s" + std::to_string(a) + std::to_string(b)] = {"p" + std::to_string(a), "p" + std::to_string(b)};
    }
  }
  return Hypergraph::from_incidence(inc);
}

}  // namespace

TEST_SUITE("simplify") {
  TEST_CASE("candidate_collapses counts") {
    CHECK(SimplificationState(fixtures::b23()).candidate_collapses(0).size() == 4);
    CHECK(SimplificationState(fixtures::theta()).candidate_collapses(0).empty());
    CHECK(SimplificationState(fixtures::sv3()).candidate_collapses(0).size() == 6);
    for (const auto& op : SimplificationState(fixtures::sv3()).candidate_collapses(0)) {
      CHECK(op.kind == OpKind::MinimalCycleCollapse);
      CHECK(op.cycle.size() == 4);
      CHECK(op.first < op.second);
    }
  }

  TEST_CASE("candidate_cuts counts") {
    CHECK(SimplificationState(fixtures::theta()).candidate_cuts(0).empty());
    SimplificationState k5(subdivided_k5());
    REQUIRE(k5.decomposition().blocks.size() == 1);
    CHECK(k5.forbidden()[0].records.empty());
    auto cuts = k5.candidate_cuts(0);
    CHECK(cuts.size() == 2);
    for (const auto& op : cuts) {
      CHECK(op.kind == OpKind::CycleEdgeCut);
      CHECK(k5.hypergraph().members(op.second).count(op.first) == 1);
    }
  }

  TEST_CASE("candidate_prunes") {
    SimplificationState pb(fixtures::pathbranch());
    auto main = pb.candidate_prunes(tree_with(pb, "d"));
    REQUIRE(main.size() == 1);
    CHECK(main[0].first == "d");
    auto mono = pb.candidate_prunes(tree_with(pb, "m"));
    REQUIRE(mono.size() == 1);
    CHECK(mono[0].first == "m");

    SimplificationState br(fixtures::three_block_bridge());
    REQUIRE(br.decomposition().trees.size() == 1);
    CHECK(br.candidate_prunes(0).empty());
  }

  TEST_CASE("priority: cut (u,w) on THETA has topology term 0.75") {
    SimplificationState st(fixtures::theta());
    const auto& g = st.graph();
    const auto& block = st.decomposition().blocks.at(0);
    auto t = contract_clusters(g.graph(), block, st.forbidden().at(0).clusters);
    const NodeId u = *g.find("u"), w = *g.find("w");
    std::optional<EdgeId> te;
    for (EdgeId e = 0; e < t.graph.edge_count(); ++e) {
      const auto& ep = t.graph.endpoints(e);
      const std::set<NodeId> ends{t.original_node[ep.a], t.original_node[ep.b]};
      if (ends == std::set<NodeId>{u, w}) te = e;
    }
    REQUIRE(te);
    const EdgeId other = *te == 0 ? 1 : 0;
    auto ops = st.candidate_cuts(0, t, {CrossingPair{*te, other, 0}});
    auto it = std::find_if(ops.begin(), ops.end(), [](const auto& op) { return op.first == "u" && op.second == "w"; });
    REQUIRE(it != ops.end());
    CHECK(it->terms.topo == doctest::Approx(0.75).epsilon(1e-12));
  }

  TEST_CASE("priority: collapse (e,f) on B23 has topology term 1.25") {
    SimplificationState st(fixtures::b23());
    auto ops = st.candidate_collapses(0);
    auto it = std::find_if(ops.begin(), ops.end(), [](const auto& op) {
      return op.first == "e" && op.second == "f";
    });
    REQUIRE(it != ops.end());
    CHECK(it->terms.topo == doctest::Approx(1.25).epsilon(1e-12));
    for (const auto& op : ops) {
      for (double v : {op.terms.stat, op.terms.adj, op.terms.btw}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
      CHECK(op.priority == doctest::Approx(priority(op.terms, st.params())));
    }
  }

  TEST_CASE("priority: prune topology terms on PATHBRANCH") {
    SimplificationState st(fixtures::pathbranch());
    auto d = st.candidate_prunes(tree_with(st, "d"));
    auto m = st.candidate_prunes(tree_with(st, "m"));
    REQUIRE(d.size() == 1);
    REQUIRE(m.size() == 1);
    CHECK(d[0].terms.topo == doctest::Approx(0.0));
    CHECK(m[0].terms.topo == doctest::Approx(0.75));
    CHECK(d[0].terms.adj == 0.0);
  }

  TEST_CASE("priority formula and parameter validation") {
    PriorityParams p;
    p.alpha = 1;
    p.beta = 2;
    p.gamma = 3;
    p.delta = 4;
    CHECK(priority({0.5, 0.25, 0.125, 1.25}, p) == doctest::Approx(0.5 + 0.5 + 0.375 + 5.0));
    p.beta = -1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    PriorityParams none;
    none.target = {false, false, std::nullopt};
    CHECK_THROWS_AS(none.validate(), std::invalid_argument);
  }

  TEST_CASE("priority of an edge on no basis cycle is a contract violation") {
    SimplificationState st(fixtures::pathbranch());
    const auto& g = st.graph();
    const NodeId v = *g.find("v"), gg = *g.find("g");
    ContractedBlock fake{Multigraph(2, {{0, 1}}), {v, gg}, {{}, {}}, {*g.find_edge(v, gg)}, {{*g.find_edge(v, gg)}}};
    CHECK_THROWS_AS(st.candidate_cuts(0, fake, {CrossingPair{0, 0, 0}}), std::logic_error);
  }

  TEST_CASE("collapse on THETA merging (u,v) leaves e as a monogon") {
    SimplificationState st(fixtures::theta());
    REQUIRE(st.apply_collapse(collapse(st, "u", "v", {"u", "e", "v", "w"})));
    CHECK(b1(st) == 1);
    const auto& h = st.hypergraph();
    CHECK(h.has_vertex("u+v"));
    CHECK(h.members("e") == Hypergraph::Members{"u+v"});
    CHECK(st.log().ops.back().predicted_b1 == -1);
    CHECK(st.log().genealogy.at("u+v") == std::vector<std::string>{"u", "v"});
    CHECK(st.resolve("u") == "u+v");
    CHECK(st.basis().size() == 1);
  }

  TEST_CASE("collapse on B23 in both directions") {
    SimplificationState ab(fixtures::b23());
    REQUIRE(ab.apply_collapse(collapse(ab, "a", "b", {"a", "b", "e", "f"})));
    CHECK(b1(ab) == 0);
    CHECK(ab.log().ops.back().predicted_b1 == -2);
    CHECK(ab.basis().empty());

    SimplificationState ef(fixtures::b23());
    REQUIRE(ef.apply_collapse(collapse(ef, "e", "f", {"a", "b", "e", "f"})));
    CHECK(b1(ef) == 1);
    CHECK(ef.log().ops.back().predicted_b1 == -1);
    CHECK(ef.hypergraph().has_hyperedge("e+f"));
  }

  TEST_CASE("stale collapse is skipped with a notice") {
    SimplificationState st(fixtures::theta());
    auto op = collapse(st, "u", "v", {"u", "e", "v", "w"});
    REQUIRE(st.apply_collapse(op));
    const auto notices = st.log().notices.size();
    CHECK_FALSE(st.apply_collapse(op));
    CHECK(st.log().notices.size() == notices + 1);
    CHECK(st.log().ops.size() == 1);
  }

  TEST_CASE("cut (u,w) on THETA leaves one 6-cycle") {
    SimplificationState st(fixtures::theta());
    REQUIRE(st.apply_cut(cut("u", "w")));
    CHECK(b1(st) == 1);
    REQUIRE(st.basis().size() == 1);
    CHECK(st.basis()[0].size() == 6);
    REQUIRE(st.log().annotations.size() == 1);
    CHECK(st.log().annotations[0] == CutAnnotation{"u", "w"});
    CHECK(st.log().ops.back().after.b0 == 1);
  }

  TEST_CASE("cut on TRIANGLE6 leaves a tree; cut on a bridge is rejected") {
    SimplificationState st(fixtures::triangle6());
    const auto& [e, m] = *st.hypergraph().hyperedges().begin();
    REQUIRE(st.apply_cut(cut(*m.begin(), e)));
    CHECK(betti_numbers(st.graph().graph()) == Betti{1, 0});

    SimplificationState pb(fixtures::pathbranch());
    CHECK_FALSE(pb.apply_cut(cut("v", "g")));
    CHECK(pb.log().ops.empty());
    CHECK(pb.log().notices.size() == 1);
    CHECK(pb.hypergraph() == fixtures::pathbranch());
  }

  TEST_CASE("prune d, then h becomes a leaf") {
    SimplificationState st(fixtures::pathbranch());
    REQUIRE(st.apply_prune(prune("d", "h")));
    CHECK_FALSE(st.hypergraph().has_vertex("d"));
    CHECK(st.hypergraph().members("h") == Hypergraph::Members{"c"});
    CHECK(st.log().ops.back().before == st.log().ops.back().after);
    st.refresh();
    auto next = st.candidate_prunes(tree_with(st, "h"));
    REQUIRE(next.size() == 1);
    CHECK(next[0].first == "h");
    CHECK_FALSE(st.apply_prune(prune("d", "h")));
  }

  TEST_CASE("prune the monogon m") {
    SimplificationState st(fixtures::pathbranch());
    const auto before = st.hypergraph().degree("v");
    REQUIRE(st.apply_prune(prune("m", "v")));
    CHECK_FALSE(st.hypergraph().has_hyperedge("m"));
    CHECK(st.hypergraph().degree("v") == before - 1);
  }

  TEST_CASE("pruning the last vertex removes its emptied hyperedge") {
    SimplificationState st(fixtures::monogon());
    REQUIRE(st.apply_prune(prune("v", "m")));
    CHECK(st.hypergraph().vertex_count() == 0);
    CHECK(st.hypergraph().hyperedge_count() == 0);
    CHECK(st.log().ops.back().cascade == std::vector<std::string>{"m"});
    CHECK(st.log().ops.back().predicted_b0 == -1);
  }

  TEST_CASE("simplify examples") {
    auto b32 = simplify(fixtures::b32());
    REQUIRE(b32.log.ops.size() == 1);
    CHECK(b32.log.ops[0].kind == OpKind::MinimalCycleCollapse);
    CHECK(is_convex_polygon_planar(b32.hypergraph));

    auto theta = simplify(fixtures::theta());
    CHECK(theta.log.ops.empty());
    CHECK(theta.hypergraph == fixtures::theta());

    for (const auto& [name, h] : fixtures::all()) {
      CAPTURE(name);
      auto r = simplify(h);
      CHECK(is_convex_polygon_planar(r.hypergraph));
      CHECK(replay(h, r.log) == r.hypergraph);
    }
  }

  TEST_CASE("subdivided K5 resolves with cuts") {
    auto r = simplify(subdivided_k5());
    CHECK(is_convex_polygon_planar(r.hypergraph));
    CHECK(!r.log.ops.empty());
    for (const auto& op : r.log.ops) CHECK(op.kind == OpKind::CycleEdgeCut);
    CHECK(r.log.annotations.size() == r.log.ops.size());
  }

  TEST_CASE("op budget and eta targets") {
    PriorityParams p;
    p.target.op_budget = 1;
    auto r = simplify(fixtures::k33(), p);
    CHECK(r.log.ops.size() == 1);

    PriorityParams e;
    e.target = {false, true, std::nullopt};
    e.eta_threshold = 0.3;
    auto re = simplify(fixtures::two_clusters(), e);
    CHECK(!re.log.eta_trace.empty());
    auto d = topological_decomposition(build_bipartite(re.hypergraph));
    for (const auto& b : d.blocks) CHECK(b.entanglement.value() <= 0.3 + 1e-12);
  }

  TEST_CASE("full recompute gives the same result") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 15; ++i) {
      auto h = oracle::random_nonplanar_hypergraph(rng, 40);
      PriorityParams p;
      p.full_recompute = true;
      auto a = simplify(h, p);
      CHECK(is_convex_polygon_planar(a.hypergraph));
      CHECK(replay(h, a.log) == a.hypergraph);
    }
  }

  TEST_CASE("property: Betti contracts, replay and priority order on random inputs") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
      auto h = i % 2 == 0 ? oracle::random_nonplanar_hypergraph(rng, 50)
                          : oracle::random_connected_hypergraph(rng, 4 + rng() % 10, 3 + rng() % 10, 4);
      PriorityParams p;
      p.seed = static_cast<std::uint64_t>(i);
      p.prune_threshold = 0.5;
      auto r = simplify(h, p);
      CAPTURE(i);
      CHECK(is_convex_polygon_planar(r.hypergraph));
      CHECK(replay(h, r.log) == r.hypergraph);
      for (const auto& op : r.log.ops) {
        CHECK(op.after.b1 - op.before.b1 == op.predicted_b1);
        CHECK(op.after.b0 - op.before.b0 == op.predicted_b0);
        CHECK(op.predicted_b0 == 0);
        if (op.kind == OpKind::CycleEdgeCut) CHECK(op.predicted_b1 == -1);
        if (op.kind == OpKind::LeafPrune) CHECK(op.predicted_b1 == 0);
      }
      // Within one queue generation of one structure, priorities never rise.
      std::map<std::pair<std::string, std::uint32_t>, double> last;
      for (const auto& op : r.log.ops) {
        auto key = std::make_pair(op.structure, op.epoch);
        if (auto it = last.find(key); it != last.end()) CHECK(op.priority <= it->second + 1e-12);
        last[key] = op.priority;
      }
    }
  }

  TEST_CASE("property: pruning keeps a deepest root-to-leaf path") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
      // A K22 block with a random tree hanging off vertex u.
      auto tree = oracle::random_tree_hypergraph(rng, 6 + rng() % 25);
      Hypergraph h = fixtures::k22();
      for (const auto& v : tree.vertices()) h.add_vertex("t" + v);
      for (const auto& [e, m] : tree.hyperedges()) {
        Hypergraph::Members mm;
        for (const auto& v : m) mm.insert("t" + v);
        h.add_hyperedge("t" + e, mm);
      }
      h.add_hyperedge("hook", {"u", "tv0"});

      auto g = build_bipartite(h);
      const auto d = oracle::distances(g.graph(), *g.find("u"));
      int deepest = 0;
      for (int x : d) deepest = std::max(deepest, x);
      std::vector<std::string> deepest_leaves;
      for (NodeId x = 0; x < g.node_count(); ++x) {
        if (d[x] == deepest) deepest_leaves.push_back(g.id(x));
      }

      PriorityParams p = topo_only();
      p.prune_threshold = 1e-9;
      auto r = simplify(h, p);
      std::size_t pruned = 0;
      for (const auto& op : r.log.ops) pruned += op.kind == OpKind::LeafPrune ? 1 : 0;
      CAPTURE(i);
      const bool survives = std::any_of(deepest_leaves.begin(), deepest_leaves.end(),
                                        [&](const std::string& id) { return r.hypergraph.contains(id); });
      CHECK(survives);
      // Its whole path back to u is intact: distances from u are unchanged.
      auto g2 = build_bipartite(r.hypergraph);
      const auto d2 = oracle::distances(g2.graph(), *g2.find("u"));
      int deepest2 = 0;
      for (int x : d2) deepest2 = std::max(deepest2, x);
      CHECK(deepest2 == deepest);
      CHECK(g2.edge_count() + pruned == g.edge_count());
    }
  }
}
