#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abc/election.hpp"

namespace abc {

enum class AxisKind { sp, sc };

/// A linear order of candidates (single-peaked) or voters (single-crossing).
struct Axis {
  AxisKind kind;
  std::vector<int> order;  // 1-based ids in axis order

  /// position()[id - 1] is the 1-based axis position of `id`.
  std::vector<int> positions() const;
};

/// Order of 0..universe-1 in which every set is contiguous, or nullopt when
/// none exists. PQ-tree reduction, one set at a time.
std::optional<std::vector<int>> consecutive_ones_order(int universe, const std::vector<std::vector<int>>& sets);

/// Is every nonempty ballot (SP) or approver set (SC) contiguous along `axis`?
bool axis_is_valid(const Election& e, const Axis& axis);

/// A verified axis, or nullopt when the election is not single-peaked
/// (resp. single-crossing).
std::optional<Axis> find_axis(const Election& e, AxisKind kind);

std::string format_axis(const Axis& axis);

}  // namespace abc
