#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/decomposition.hpp"
#include "hypersimp/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hypersimp;

namespace {

std::set<std::string> names(const BipartiteGraph& g, const std::vector<NodeId>& xs) {
  std::set<std::string> out;
  for (NodeId x : xs) out.insert(g.id(x));
  return out;
}

std::vector<std::vector<EdgeId>> edge_sets(const std::vector<Cycle>& cs) {
  std::vector<std::vector<EdgeId>> out;
  for (const auto& c : cs) out.push_back(c.edges);
  return out;
}

// Every simple cycle as an edge subset (brute force, small graphs only).
std::vector<std::vector<EdgeId>> all_simple_cycles(const Multigraph& g) {
  std::vector<std::vector<EdgeId>> out;
  const std::size_t m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<EdgeId> es;
    std::vector<int> deg(g.node_count(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1U) {
        es.push_back(e);
        ++deg[g.endpoints(e).a];
        ++deg[g.endpoints(e).b];
      }
    }
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; })) continue;
    Multigraph sub = oracle::edge_subgraph(g, es);
    std::vector<bool> removed(g.node_count());
    for (NodeId x = 0; x < g.node_count(); ++x) removed[x] = deg[x] == 0;
    if (oracle::component_count(sub, removed) == 1) out.push_back(es);
  }
  return out;
}

void check_tree_invariants(const TopologicalDecomposition& d) {
  for (const auto& t : d.trees) {
    if (t.edges.empty()) {
      CHECK(t.roots.empty());
      continue;
    }
    CHECK(t.edges.size() + 1 == t.nodes.size());
    std::set<std::uint32_t> blocks;
    for (const auto& r : t.roots) {
      CHECK(t.depth_of(r.node) == 0);
      if (r.block) blocks.insert(*r.block);
    }
    if (t.kind == TreeKind::Branch) {
      CHECK(t.roots.size() == 1);
    } else {
      CHECK(t.roots.size() >= 2);
      CHECK(blocks.size() == t.roots.size());
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i) CHECK(t.low[i] >= t.depth[i]);
  }
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("block_decomposition examples") {
    auto k22 = build_bipartite(fixtures::k22());
    auto bd = block_decomposition(k22.graph());
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].edges.size() == 4);
    CHECK(bd.articulation.empty());

    auto pb = build_bipartite(fixtures::pathbranch());
    auto pd = block_decomposition(pb.graph());
    std::size_t multi = 0, single = 0;
    for (const auto& b : pd.blocks) (b.edges.size() > 1 ? multi : single) += 1;
    CHECK(multi == 1);
    CHECK(single == 5);
    const auto oracle_art = oracle::articulation_by_deletion(pb.graph());
    std::vector<NodeId> expect;
    for (NodeId x = 0; x < pb.node_count(); ++x) {
      if (oracle_art[x]) expect.push_back(x);
    }
    auto got = pd.articulation;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(names(pb, got) == std::set<std::string>{"c", "g", "h", "v"});

    // A 5-node bipartite path.
    Multigraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(block_decomposition(path).blocks.size() == 4);
  }

  TEST_CASE("articulation nodes match node deletion on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
      auto h = oracle::random_hypergraph(rng, 2 + rng() % 12, 1 + rng() % 10, 3);
      auto g = build_bipartite(h);
      auto bd = block_decomposition(g.graph());
      const auto art = oracle::articulation_by_deletion(g.graph());
      std::vector<bool> got(g.node_count(), false);
      for (NodeId x : bd.articulation) got[x] = true;
      CHECK(got == art);
      // Blocks are edge-disjoint and cover every edge.
      std::vector<int> seen(g.edge_count(), 0);
      for (const auto& b : bd.blocks) {
        for (EdgeId e : b.edges) ++seen[e];
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
  }

  TEST_CASE("bridge with three roots") {
    auto g = build_bipartite(fixtures::three_block_bridge());
    auto d = topological_decomposition(g);
    CHECK(d.blocks.size() == 3);
    REQUIRE(d.trees.size() == 1);
    CHECK(d.trees[0].kind == TreeKind::Bridge);
    CHECK(d.trees[0].roots.size() == 3);
    check_tree_invariants(d);
  }

  TEST_CASE("PATHBRANCH: one block and two branches at v") {
    auto g = build_bipartite(fixtures::pathbranch());
    auto d = topological_decomposition(g);
    REQUIRE(d.blocks.size() == 1);
    CHECK(names(g, d.blocks[0].nodes) == std::set<std::string>{"u", "v", "e", "f"});
    REQUIRE(d.trees.size() == 2);
    std::set<std::set<std::string>> trees;
    for (const auto& t : d.trees) {
      CHECK(t.kind == TreeKind::Branch);
      REQUIRE(t.roots.size() == 1);
      CHECK(g.id(t.roots[0].node) == "v");
      trees.insert(names(g, t.nodes));
    }
    CHECK(trees == std::set<std::set<std::string>>{{"v", "g", "c", "h", "d"}, {"v", "m"}});
    check_tree_invariants(d);
    // Depths along the chain and the low values.
    const auto& main = d.trees[0].nodes.size() == 5 ? d.trees[0] : d.trees[1];
    const auto& mono = d.trees[0].nodes.size() == 5 ? d.trees[1] : d.trees[0];
    CHECK(main.depth_of(*g.find("d")) == 4);
    CHECK(main.low_of(*g.find("d")) == 4);
    CHECK(main.low_of(*g.find("g")) == 4);
    CHECK(main.low_of(*g.find("v")) == 4);
    CHECK(mono.low_of(*g.find("m")) == 1);
  }

  TEST_CASE("TRIANGLE6 is one block without trees") {
    auto d = topological_decomposition(build_bipartite(fixtures::triangle6()));
    CHECK(d.blocks.size() == 1);
    CHECK(d.trees.empty());
    CHECK(d.blocks[0].betti1 == 1);
    CHECK(d.blocks[0].basis.size() == 1);
    CHECK(d.blocks[0].basis[0].length() == 6);
  }

  TEST_CASE("THETA basis is the two tight 4-cycles") {
    auto g = build_bipartite(fixtures::theta());
    auto basis = tight_cycle_basis(g.graph());
    REQUIRE(basis.size() == 2);
    std::set<std::set<std::string>> got;
    for (const auto& c : basis) {
      CHECK(c.length() == 4);
      got.insert(names(g, c.nodes));
    }
    CHECK(got == std::set<std::set<std::string>>{{"u", "e", "v", "w"}, {"u", "f", "t", "w"}});
    // Oracle: of the three simple cycles only the two 4-cycles are tight,
    // and only two are independent.
    auto cycles = all_simple_cycles(g.graph());
    CHECK(cycles.size() == 3);
    CHECK(oracle::gf2_rank(cycles, g.edge_count()) == 2);
    std::size_t tight = 0;
    for (const auto& es : cycles) tight += oracle::tight_by_all_pairs(g.graph(), cycle_from_edges(g.graph(), es)) ? 1 : 0;
    CHECK(tight == 2);
  }

  TEST_CASE("K22 and SV3 bases") {
    auto k = build_bipartite(fixtures::k22());
    auto kb = tight_cycle_basis(k.graph());
    REQUIRE(kb.size() == 1);
    CHECK(kb[0].minimal());

    auto g = build_bipartite(fixtures::sv3());
    auto d = topological_decomposition(g);
    REQUIRE(d.blocks.size() == 1);
    const auto& b = d.blocks[0];
    CHECK(b.betti1 == 3);
    CHECK(b.betti1 == 1 + static_cast<std::int64_t>(b.edges.size()) - static_cast<std::int64_t>(b.nodes.size()));
    REQUIRE(b.basis.size() == 3);
    const NodeId v0 = *g.find("v0");
    for (const auto& c : b.basis) {
      CHECK(c.minimal());
      CHECK(c.contains_node(v0));
    }
    CHECK(oracle::gf2_rank(edge_sets(b.basis), g.edge_count()) == 3);
  }

  TEST_CASE("Betti numbers and entanglement") {
    auto tree = fixtures::pathbranch();
    tree.erase_hyperedge("e");
    tree.erase_hyperedge("f");
    tree.erase_vertex("u");
    CHECK(betti_numbers(tree) == Betti{1, 0});
    auto td = topological_decomposition(build_bipartite(tree));
    CHECK(td.blocks.empty());
    REQUIRE(td.trees.size() == 1);
    CHECK(td.trees[0].roots.size() == 1);

    CHECK(betti_numbers(fixtures::svstar3()).b1 == 3);
    CHECK(build_bipartite(fixtures::svstar3()).edge_count() == 10);
    CHECK(betti_numbers(fixtures::theta()) == Betti{1, 2});

    auto d = topological_decomposition(build_bipartite(fixtures::sv3()));
    CHECK(d.blocks[0].entanglement == Rational::make(3, 7));
    CHECK(entanglement(0, 5) == Rational{0, 1});
    CHECK(Rational::make(4, 6).str() == "2/3");
  }

  TEST_CASE("disconnected input and isolated vertices") {
    Hypergraph h = fixtures::k22();
    h.add_vertex("lonely");
    h.add_hyperedge("x", {"p", "q"});
    h.add_vertex("p");
    h.add_vertex("q");
    auto g = build_bipartite(h);
    auto d = topological_decomposition(g);
    CHECK(d.components.count == 3);
    CHECK(betti_numbers(g.graph()) == Betti{3, 1});
    std::size_t edgeless = 0;
    for (const auto& t : d.trees) edgeless += t.edges.empty() ? 1 : 0;
    CHECK(edgeless == 1);
    check_tree_invariants(d);
  }

  TEST_CASE("property: cover, rank, tightness and tree roots on random hypergraphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
      auto h = i % 3 == 0 ? oracle::random_hypergraph(rng, 2 + rng() % 40, 1 + rng() % 40, 4)
                          : oracle::random_connected_hypergraph(rng, 2 + rng() % 40, 1 + rng() % 30, 4);
      auto g = build_bipartite(h);
      DecompositionOptions opts;
      opts.jobs = 1 + static_cast<unsigned>(i % 3);
      auto d = topological_decomposition(g, opts);
      std::vector<int> seen(g.edge_count(), 0);
      std::int64_t b1 = 0;
      for (const auto& b : d.blocks) {
        for (EdgeId e : b.edges) ++seen[e];
        b1 += b.betti1;
        CHECK(static_cast<std::int64_t>(b.basis.size()) == b.betti1);
        CHECK(oracle::gf2_rank(edge_sets(b.basis), g.edge_count()) == b.basis.size());
        for (const auto& c : b.basis) {
          CHECK(oracle::simple_alternating_cycle(g, c));
          CHECK(oracle::tight_by_all_pairs(g.graph(), c));
        }
        CHECK(b.entanglement > Rational{0, 1});
      }
      for (const auto& t : d.trees) {
        for (EdgeId e : t.edges) ++seen[e];
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
      CHECK(b1 == betti_numbers(g.graph()).b1);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto ref = d.edge_owner[e];
        const auto& list = ref.kind == StructureKind::Block ? d.blocks[ref.index].edges : d.trees[ref.index].edges;
        CHECK(std::binary_search(list.begin(), list.end(), e));
      }
      check_tree_invariants(d);
    }
  }

  TEST_CASE("property: large random graphs keep the edge-disjoint cover") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 4; ++i) {
      auto h = oracle::random_connected_hypergraph(rng, 600, 400, 3);
      auto g = build_bipartite(h);
      DecompositionOptions opts;
      opts.compute_basis = false;
      auto d = topological_decomposition(g, opts);
      std::size_t covered = 0;
      for (const auto& b : d.blocks) covered += b.edges.size();
      for (const auto& t : d.trees) covered += t.edges.size();
      CHECK(covered == g.edge_count());
      check_tree_invariants(d);
    }
  }
}
