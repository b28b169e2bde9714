#pragma once

#include "abc/election.hpp"
#include "abc/graph.hpp"

namespace fixtures {

// a, b, c = 1, 2, 3.
inline abc::Election example1(int k = 2) {
  return abc::Election(3, k, {{1}, {1, 3}, {1, 3}, {2, 3}, {2, 3}, {2}});
}

// MES walk-through: a, b, c, d = 1..4.
inline abc::Election mes_example() { return abc::Election(4, 3, {{1, 3}, {1, 3}, {1, 2}, {2, 4}}); }

// Ballots {a}, {a,b}, {b,c,d}, {c,d}.
inline abc::Election figure6(int k = 2) { return abc::Election(4, k, {{1}, {1, 2}, {2, 3, 4}, {3, 4}}); }

inline abc::Graph k4() { return abc::Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

inline abc::Graph path(int n) {
  std::vector<abc::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return abc::Graph(n, edges);
}

}  // namespace fixtures
