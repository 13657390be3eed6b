#include "hypersimp/fixtures.hpp"

namespace hypersimp::fixtures {

Hypergraph k22() { return Hypergraph::from_incidence({{"e", {"u", "v"}}, {"f", {"u", "v"}}}); }

Hypergraph triangle6() {
  return Hypergraph::from_incidence(
      {{"e1", {"v1", "v2"}}, {"e2", {"v2", "v3"}}, {"e3", {"v1", "v3"}}});
}

Hypergraph theta() {
  return Hypergraph::from_incidence(
      {{"w", {"u", "v", "t"}}, {"e", {"u", "v"}}, {"f", {"u", "t"}}});
}

Hypergraph b32() {
  return Hypergraph::from_incidence({{"e", {"a", "b", "c"}}, {"f", {"a", "b", "c"}}});
}

Hypergraph b23() {
  return Hypergraph::from_incidence(
      {{"e", {"a", "b"}}, {"f", {"a", "b"}}, {"g", {"a", "b"}}});
}

Hypergraph sv3() {
  return Hypergraph::from_incidence({{"e1", {"v0", "v1", "v2"}},
                                     {"e2", {"v0", "v2", "v3"}},
                                     {"e3", {"v0", "v3", "v1"}}});
}

Hypergraph sh3() { return dualize(sv3()); }

Hypergraph svstar3() {
  return Hypergraph::from_incidence({{"e0", {"v0", "v1", "v2", "v3"}},
                                     {"e1", {"v0", "v1"}},
                                     {"e2", {"v0", "v2"}},
                                     {"e3", {"v0", "v3"}}});
}

Hypergraph shstar3() { return dualize(svstar3()); }

Hypergraph pathbranch() {
  return Hypergraph::from_incidence({{"e", {"u", "v"}},
                                     {"f", {"u", "v"}},
                                     {"g", {"v", "c"}},
                                     {"h", {"c", "d"}},
                                     {"m", {"v"}}});
}

Hypergraph two_clusters() {
  return Hypergraph::from_incidence({
      {"ea1", {"a0", "a1", "a2"}},
      {"ea2", {"a0", "a2", "a3"}},
      {"ea3", {"a0", "a3", "a1"}},
      {"eb1", {"b0", "b1", "b2"}},
      {"eb2", {"b0", "b2", "b3"}},
      {"eb3", {"b0", "b3", "b1"}},
      {"p1", {"a1", "x"}},
      {"p2", {"x", "b1"}},
      {"q1", {"a2", "y"}},
      {"q2", {"y", "b2"}},
  });
}

Hypergraph three_block_bridge() {
  return Hypergraph::from_incidence({
      {"e1", {"u1", "v1"}},
      {"f1", {"u1", "v1"}},
      {"e2", {"u2", "v2"}},
      {"f2", {"u2", "v2"}},
      {"e3", {"u3", "v3"}},
      {"f3", {"u3", "v3"}},
      {"t", {"v1", "v2", "v3"}},
  });
}

Hypergraph monogon() { return Hypergraph::from_incidence({{"m", {"v"}}}); }

Hypergraph k33() {
  return Hypergraph::from_incidence(
      {{"e", {"a", "b", "c"}}, {"f", {"a", "b", "c"}}, {"g", {"a", "b", "c"}}});
}

std::vector<Named> all() {
  return {
      {"K22", k22()},
      {"TRIANGLE6", triangle6()},
      {"THETA", theta()},
      {"B32", b32()},
      {"B23", b23()},
      {"SV3", sv3()},
      {"SH3", sh3()},
      {"SVSTAR3", svstar3()},
      {"SHSTAR3", shstar3()},
      {"PATHBRANCH", pathbranch()},
      {"TWO_CLUSTERS", two_clusters()},
      {"THREE_BLOCK_BRIDGE", three_block_bridge()},
      {"MONOGON", monogon()},
      {"K33", k33()},
  };
}

}  // namespace hypersimp::fixtures
