#include "abc/intervals.hpp"

#include <algorithm>
#include <numeric>

namespace abc {

namespace {

std::optional<Interval> span_of(const std::vector<int>& members, const std::vector<int>& positions) {
  if (members.empty()) return std::nullopt;
  int lo = positions[members.front() - 1];
  int hi = lo;
  for (int x : members) {
    lo = std::min(lo, positions[x - 1]);
    hi = std::max(hi, positions[x - 1]);
  }
  if (hi - lo + 1 != static_cast<int>(members.size())) throw PreconditionError("axis does not make a set contiguous");
  return Interval{lo, hi};
}

}  // namespace

IntervalInstance make_sc_instance(int num_voters, const std::vector<std::optional<Interval>>& per_candidate, int budget) {
  std::vector<int> order(per_candidate.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = per_candidate[a];
    const auto& y = per_candidate[b];
    if (x.has_value() != y.has_value()) return x.has_value();
    if (!x) return false;
    if (x->start != y->start) return x->start < y->start;
    return x->end < y->end;
  });
  IntervalInstance inst{AxisKind::sc, num_voters, {}, {}, budget};
  for (int idx : order) {
    inst.intervals.push_back(per_candidate[idx]);
    inst.owners.push_back(idx + 1);
  }
  return inst;
}

IntervalInstance to_intervals(const Election& e, const Axis& axis) {
  if (static_cast<int>(axis.order.size()) != (axis.kind == AxisKind::sp ? e.num_candidates() : e.num_voters())) {
    throw PreconditionError("axis length does not match the election");
  }
  const auto positions = axis.positions();
  if (axis.kind == AxisKind::sp) {
    IntervalInstance inst{AxisKind::sp, e.num_candidates(), {}, {}, e.committee_size()};
    for (Voter i = 1; i <= e.num_voters(); ++i) {
      inst.intervals.push_back(span_of(e.ballot(i), positions));
      inst.owners.push_back(i);
    }
    return inst;
  }
  std::vector<std::optional<Interval>> per_candidate;
  for (Candidate c = 1; c <= e.num_candidates(); ++c) per_candidate.push_back(span_of(e.approvers(c), positions));
  return make_sc_instance(e.num_voters(), per_candidate, e.committee_size());
}

}  // namespace abc
