#ifndef HYPERSIMP_FIXTURES_HPP_
#define HYPERSIMP_FIXTURES_HPP_

#include <string>
#include <vector>

#include "hypersimp/hypergraph.hpp"

/// Small hand-built hypergraphs used by tests, docs and the CLI demo data.
namespace hypersimp::fixtures {

Hypergraph k22();          // e,f both {u,v}
Hypergraph triangle6();    // a single 6-cycle
Hypergraph theta();        // w={u,v,t}, e={u,v}, f={u,t}
Hypergraph b32();          // e,f both contain {a,b,c}
Hypergraph b23();          // e,f,g all contain {a,b}
Hypergraph sv3();          // strangled vertex v0, cycle variant
Hypergraph sh3();          // dual of sv3
Hypergraph svstar3();      // strangled vertex star variant centred at v0/e0
Hypergraph shstar3();      // dual of svstar3
Hypergraph pathbranch();   // k22 on u,v plus chain g,h and monogon m at v
/// Two sv3 copies joined by two disjoint paths: one topological block with
/// two forbidden clusters.
Hypergraph two_clusters();
/// Three k22 blocks joined by the hyperedge t touching one vertex of each.
Hypergraph three_block_bridge();
Hypergraph monogon();      // m={v}
Hypergraph k33();          // three vertices, three hyperedges, full incidence

struct Named {
  std::string name;
  Hypergraph h;
};
/// All canonical fixtures in a fixed order.
std::vector<Named> all();

}  // namespace hypersimp::fixtures

#endif  // HYPERSIMP_FIXTURES_HPP_
