#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abc/election.hpp"
#include "abc/graph.hpp"
#include "abc/intervals.hpp"

namespace abc {

/// Seeded source for every generator; a fixed seed reproduces bit-identical
/// instances (draws avoid the implementation-defined std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool coin(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Each ballot approves each candidate independently with probability 1/3.
Election random_election(Rng& rng, int max_candidates, int max_voters);
Election election_of_size(Rng& rng, int m, int n, int k);

/// Uniform simple graph on `vertices` vertices with edge probability 1/2.
Graph random_graph(Rng& rng, int vertices);

/// Every labelled simple graph on n vertices (2^(n(n-1)/2) of them).
std::vector<Graph> all_graphs(int vertices);

/// 3-regular simple graph by the pairing model with rejection. `vertices` must
/// be even and >= 4.
Graph random_cubic_graph(Rng& rng, int vertices);

/// Single-peaked election: ballots are intervals of a hidden random axis
/// (some ballots empty), candidates relabelled.
Election random_sp_election(Rng& rng, int max_candidates, int max_voters);

/// Single-crossing election: approver sets are intervals of a hidden random
/// voter order (some candidates unapproved).
Election random_sc_election(Rng& rng, int max_candidates, int max_voters);

/// Same constructions with the sizes fixed.
Election sp_election_of_size(Rng& rng, int m, int n, int k);
Election sc_election_of_size(Rng& rng, int m, int n, int k);

}  // namespace abc
