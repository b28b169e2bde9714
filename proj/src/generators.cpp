#include "abc/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace abc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Election election_of_size(Rng& rng, int m, int n, int k) {
  std::vector<Ballot> ballots(n);
  for (auto& b : ballots) {
    for (Candidate c = 1; c <= m; ++c) {
      if (rng.coin(1, 3)) b.push_back(c);
    }
  }
  return Election(m, k, std::move(ballots));
}

Election random_election(Rng& rng, int max_candidates, int max_voters) {
  const int m = rng.between(1, max_candidates);
  const int n = rng.between(1, max_voters);
  const int k = rng.between(1, m);
  return election_of_size(rng, m, n, k);
}

Graph random_graph(Rng& rng, int vertices) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= vertices; ++u) {
    for (Vertex v = u + 1; v <= vertices; ++v) {
      if (rng.coin(1, 2)) edges.emplace_back(u, v);
    }
  }
  return Graph(vertices, std::move(edges));
}

std::vector<Graph> all_graphs(int vertices) {
  std::vector<Edge> slots;
  for (Vertex u = 1; u <= vertices; ++u) {
    for (Vertex v = u + 1; v <= vertices; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    out.emplace_back(vertices, std::move(edges));
  }
  return out;
}

Graph random_cubic_graph(Rng& rng, int vertices) {
  if (vertices < 4 || vertices % 2 != 0) throw PreconditionError("3-regular graphs need an even vertex count >= 4");
  for (;;) {
    std::vector<Vertex> points;
    for (Vertex v = 1; v <= vertices; ++v) points.insert(points.end(), {v, v, v});
    rng.shuffle(points);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      Vertex a = std::min(points[i], points[i + 1]);
      Vertex b = std::max(points[i], points[i + 1]);
      if (a == b || !edges.emplace(a, b).second) {
        simple = false;
        break;
      }
    }
    if (simple) return Graph(vertices, std::vector<Edge>(edges.begin(), edges.end()));
  }
}

namespace {

// A random interval of [1, size], or nullopt with probability 1/5.
std::optional<Interval> random_interval(Rng& rng, int size) {
  if (rng.coin(1, 5)) return std::nullopt;
  int a = rng.between(1, size);
  int b = rng.between(1, size);
  if (a > b) std::swap(a, b);
  return Interval{a, b};
}

}  // namespace

Election sp_election_of_size(Rng& rng, int m, int n, int k) {
  std::vector<Candidate> axis(m);
  std::iota(axis.begin(), axis.end(), 1);
  rng.shuffle(axis);
  std::vector<Ballot> ballots;
  for (int i = 0; i < n; ++i) {
    Ballot b;
    if (auto iv = random_interval(rng, m)) {
      for (int p = iv->start; p <= iv->end; ++p) b.push_back(axis[p - 1]);
    }
    ballots.push_back(std::move(b));
  }
  return Election(m, k, std::move(ballots));
}

Election sc_election_of_size(Rng& rng, int m, int n, int k) {
  std::vector<Voter> order(n);
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(order);
  std::vector<Ballot> ballots(n);
  for (Candidate c = 1; c <= m; ++c) {
    if (auto iv = random_interval(rng, n)) {
      for (int p = iv->start; p <= iv->end; ++p) ballots[order[p - 1] - 1].push_back(c);
    }
  }
  return Election(m, k, std::move(ballots));
}

Election random_sp_election(Rng& rng, int max_candidates, int max_voters) {
  const int m = rng.between(1, max_candidates);
  const int n = rng.between(1, max_voters);
  const int k = rng.between(1, m);
  return sp_election_of_size(rng, m, n, k);
}

Election random_sc_election(Rng& rng, int max_candidates, int max_voters) {
  const int m = rng.between(1, max_candidates);
  const int n = rng.between(1, max_voters);
  const int k = rng.between(1, m);
  return sc_election_of_size(rng, m, n, k);
}

}  // namespace abc
