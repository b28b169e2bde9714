#pragma once

#include <optional>
#include <vector>

#include "abc/axis.hpp"
#include "abc/election.hpp"

namespace abc {

struct Interval {
  int start;  // 1-based, inclusive
  int end;    // inclusive

  bool contains(int x) const { return start <= x && x <= end; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The interval view of a restricted election.
///
/// SP: one entry per ballot (in ballot order) over candidate positions 1..m.
/// SC: one entry per candidate over voter positions 1..n, nonempty entries
/// sorted by (start, end, candidate), empty entries after them by candidate.
/// A nullopt entry marks an empty ballot / unapproved candidate.
struct IntervalInstance {
  AxisKind kind;
  int universe_size;
  std::vector<std::optional<Interval>> intervals;
  std::vector<int> owners;  // voter (SP) or candidate (SC) of each entry
  int budget;               // k

  int num_entries() const { return static_cast<int>(intervals.size()); }
};

/// Throws PreconditionError when the axis does not make every set contiguous.
IntervalInstance to_intervals(const Election& e, const Axis& axis);

/// SC instance from raw per-candidate intervals (index i is candidate i + 1);
/// applies the canonical sort.
IntervalInstance make_sc_instance(int num_voters, const std::vector<std::optional<Interval>>& per_candidate, int budget);

}  // namespace abc
