#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "abc/generators.hpp"
#include "abc/graph.hpp"
#include "fixtures.hpp"

using namespace abc;

namespace {

bool adjacent(const Graph& g, Vertex a, Vertex b) {
  const auto& n = g.neighbors(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

// Calls `visit` on every labelled graph on n vertices with maximum degree <= 3.
void for_each_subcubic(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> slots;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  std::vector<int> degree(n + 1, 0);
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      visit(Graph(n, chosen));
      return;
    }
    rec(i + 1);
    const auto [u, v] = slots[i];
    if (degree[u] < 3 && degree[v] < 3) {
      ++degree[u];
      ++degree[v];
      chosen.push_back(slots[i]);
      rec(i + 1);
      chosen.pop_back();
      --degree[u];
      --degree[v];
    }
  };
  rec(0);
}

std::vector<Vertex> restrict_to(const std::vector<Vertex>& set, int n) {
  std::vector<Vertex> out;
  for (Vertex v : set) {
    if (v <= n) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("graph parsing") {
  const Graph g = parse_graph_text("graph 1\nvertices: 3\nedges: 2\n1 2\n2 3\n");
  CHECK(g == fixtures::path(3));
  CHECK_THROWS_AS(parse_graph_text("graph 1\nvertices: 3\nedges: 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("graph 1\nvertices: 3\nedges: 2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("graph 1\nvertices: 3\nedges: 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("graph 2\n"), ParseError);
  std::ostringstream out;
  write_graph(out, fixtures::k4());
  CHECK(parse_graph_text(out.str()) == fixtures::k4());
}

TEST_CASE("OVR deletion order") {
  CHECK(ovr_deletion_order(fixtures::path(3)) == std::vector<Vertex>{2, 1, 3});
  CHECK(ovr_deletion_order(Graph(3, {})) == std::vector<Vertex>{1, 2, 3});
  CHECK(ovr_deletion_order(fixtures::k4()) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(ovr_decide(fixtures::path(3), 2, 2));
  CHECK(!ovr_decide(fixtures::path(3), 3, 1));
  CHECK(ovr_decide(fixtures::path(3), 3, 0));
}

TEST_CASE("OVR order is a permutation and decide matches positions") {
  Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, rng.between(1, 9));
    const auto order = ovr_deletion_order(g);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> identity(g.num_vertices());
    std::iota(identity.begin(), identity.end(), 1);
    CHECK(sorted == identity);
    for (int pos = 1; pos <= g.num_vertices(); ++pos) {
      const Vertex v = order[pos - 1];
      for (int k = 0; k <= g.num_vertices(); ++k) CHECK(ovr_decide(g, v, k) == (pos <= g.num_vertices() - k));
    }
    CHECK(!ovr_decide(g, order.back(), 1));
  }
}

TEST_CASE("lexicographically first maximal independent set") {
  CHECK(lfmis(fixtures::k4()) == std::vector<Vertex>{1});
  CHECK(lfmis(Graph(5, {})) == std::vector<Vertex>{1, 2, 3, 4, 5});
  CHECK(lfmis(fixtures::path(4)) == std::vector<Vertex>{1, 3});
}

TEST_CASE("lfmis is independent and maximal") {
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, rng.between(1, 10));
    const auto set = lfmis(g);
    const auto member = [&](Vertex v) { return std::binary_search(set.begin(), set.end(), v); };
    for (Vertex a : set) {
      for (Vertex b : set) CHECK(!adjacent(g, a, b));
    }
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      if (member(v)) continue;
      const auto& n = g.neighbors(v);
      CHECK(std::any_of(n.begin(), n.end(), member));
    }
  }
}

TEST_CASE("regularization to 3-regular") {
  const Regularized same = regularize_to_3(fixtures::k4(), 2);
  CHECK(same.graph == fixtures::k4());
  CHECK(same.vertex == 2);

  const Regularized p = regularize_to_3(fixtures::path(3), 1);
  CHECK(p.graph.is_regular(3));
  CHECK(p.graph.num_vertices() == 3 + 5 * (1 + 2 + 2));
  CHECK(restrict_to(lfmis(p.graph), 3) == std::vector<Vertex>{1, 3});

  const Regularized edge = regularize_to_3(Graph(2, {{1, 2}}), 1);
  const auto edge_set = lfmis(edge.graph);
  CHECK(std::binary_search(edge_set.begin(), edge_set.end(), edge.vertex));

  CHECK_THROWS_AS(regularize_to_3(Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}), 1), PreconditionError);
}

TEST_CASE("regularization preserves lfmis on every subcubic graph up to 8 vertices") {
  long graphs = 0;
  long mismatches = 0;
  for (int n = 1; n <= 8; ++n) {
    for_each_subcubic(n, [&](const Graph& g) {
      ++graphs;
      const Regularized h = regularize_to_3(g, 1);
      if (!h.graph.is_regular(3) || restrict_to(lfmis(h.graph), n) != lfmis(g)) ++mismatches;
    });
  }
  MESSAGE("subcubic graphs checked: " << graphs);
  CHECK(mismatches == 0);
}
