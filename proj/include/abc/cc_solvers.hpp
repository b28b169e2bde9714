#pragma once

#include <cstdint>
#include <vector>

#include "abc/axis.hpp"
#include "abc/election.hpp"
#include "abc/intervals.hpp"
#include "abc/rules.hpp"

namespace abc {

struct CoverageResult {
  long coverage = 0;
  /// SP: chosen axis positions. SC: chosen entries of the sorted instance
  /// (1-based). Ascending, exactly k of them.
  std::vector<int> chosen;

  friend bool operator==(const CoverageResult&, const CoverageResult&) = default;
};

/// Maximum number of intervals hit by k points, by layered search over
/// (points placed, last point). Each layer is filled by `workers` threads.
CoverageResult solve_spcc(const IntervalInstance& inst, int workers = 1);

/// Maximum union size of k intervals, by layered search over (intervals
/// chosen, last interval that extended coverage).
CoverageResult solve_sccc(const IntervalInstance& inst, int workers = 1);

/// Voters hit by `chosen` (positions / entries as in CoverageResult).
long interval_coverage(const IntervalInstance& inst, const std::vector<int>& chosen);

/// Maps a solver witness back to election candidates, ascending.
std::vector<Candidate> witness_candidates(const IntervalInstance& inst, const Axis& axis, const CoverageResult& r);

/// Number of voters with at least one approved member of `committee`.
long cc_coverage(const Election& e, const std::vector<Candidate>& committee);

struct BruteCCResult {
  long coverage = 0;
  Committee committee;
};

/// Exhaustive CC over all k-subsets in lexicographic order; the first optimum
/// wins. Throws PreconditionError when C(m, k) exceeds `cap`.
BruteCCResult brute_cc(const Election& e, std::uint64_t cap = 5'000'000);

}  // namespace abc
