#include "abc/cc_solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "abc/parallel.hpp"

namespace abc {

namespace {

constexpr long kUnreachable = -1;

}  // namespace

CoverageResult solve_spcc(const IntervalInstance& inst, int workers) {
  const int m = inst.universe_size;
  const int k = inst.budget;
  if (inst.kind != AxisKind::sp) throw PreconditionError("solve_spcc needs an SP interval instance");
  if (k < 1 || k > m) throw PreconditionError("SP-CC needs 1 <= k <= m");

  // gain[c * (m + 1) + l]: intervals whose first hit is point c when the
  // previous point is l, i.e. l < start <= c <= end.
  std::vector<long> gain(static_cast<std::size_t>(m + 1) * (m + 1), 0);
  parallel_for(workers, static_cast<std::size_t>(m), [&](std::size_t idx) {
    const int c = static_cast<int>(idx) + 1;
    std::vector<long> starts(m + 2, 0);
    for (const auto& iv : inst.intervals) {
      if (iv && iv->contains(c)) ++starts[iv->start];
    }
    long* row = &gain[static_cast<std::size_t>(c) * (m + 1)];
    long suffix = 0;
    for (int l = c - 1; l >= 0; --l) {
      suffix += starts[l + 1];
      row[l] = suffix;
    }
  });

  const auto width = static_cast<std::size_t>(m + 1);
  std::vector<long> best(static_cast<std::size_t>(k + 1) * width, kUnreachable);
  std::vector<int> parent(best.size(), 0);
  best[0] = 0;  // no point placed, last position 0
  for (int j = 1; j <= k; ++j) {
    const long* prev = &best[static_cast<std::size_t>(j - 1) * width];
    long* cur = &best[static_cast<std::size_t>(j) * width];
    int* from = &parent[static_cast<std::size_t>(j) * width];
    parallel_for(workers, static_cast<std::size_t>(m), [&](std::size_t idx) {
      const int c = static_cast<int>(idx) + 1;
      const long* row = &gain[static_cast<std::size_t>(c) * width];
      long value = kUnreachable;
      int arg = 0;
      for (int l = 0; l < c; ++l) {
        if (prev[l] == kUnreachable) continue;
        const long candidate = prev[l] + row[l];
        if (candidate > value) {
          value = candidate;
          arg = l;
        }
      }
      cur[c] = value;
      from[c] = arg;
    });
  }

  CoverageResult out;
  const long* last = &best[static_cast<std::size_t>(k) * width];
  int end = 0;
  for (int c = 1; c <= m; ++c) {
    if (last[c] > (end ? last[end] : kUnreachable)) end = c;
  }
  out.coverage = last[end];
  for (int j = k, c = end; j >= 1; --j) {
    out.chosen.push_back(c);
    c = parent[static_cast<std::size_t>(j) * width + c];
  }
  std::reverse(out.chosen.begin(), out.chosen.end());
  return out;
}

CoverageResult solve_sccc(const IntervalInstance& inst, int workers) {
  const int entries = inst.num_entries();
  const int k = inst.budget;
  if (inst.kind != AxisKind::sc) throw PreconditionError("solve_sccc needs an SC interval instance");
  if (k < 1 || k > entries) throw PreconditionError("SC-CC needs 1 <= k <= m");

  int useful = 0;  // nonempty entries form a prefix
  while (useful < entries && inst.intervals[useful]) ++useful;

  // A chosen interval ending at or before the last covered voter adds nothing,
  // so it suffices to search over chains whose ends strictly increase; the
  // state (count, last interval) then fixes the last covered voter as its end.
  const int layers = std::min(k, useful);
  const auto width = static_cast<std::size_t>(std::max(useful, 1));
  std::vector<long> best(static_cast<std::size_t>(layers + 1) * width, kUnreachable);
  std::vector<int> parent(best.size(), -1);
  for (int d = 0; d < useful; ++d) best[width + d] = inst.intervals[d]->end - inst.intervals[d]->start + 1;
  for (int j = 2; j <= layers; ++j) {
    const long* prev = &best[static_cast<std::size_t>(j - 1) * width];
    long* cur = &best[static_cast<std::size_t>(j) * width];
    int* from = &parent[static_cast<std::size_t>(j) * width];
    parallel_for(workers, static_cast<std::size_t>(useful), [&](std::size_t idx) {
      const int d = static_cast<int>(idx);
      const Interval& next = *inst.intervals[d];
      long value = kUnreachable;
      int arg = -1;
      for (int e = 0; e < d; ++e) {
        if (prev[e] == kUnreachable) continue;
        const int last_voter = inst.intervals[e]->end;
        if (last_voter >= next.end) continue;
        const long candidate = prev[e] + next.end - std::max(last_voter, next.start - 1);
        if (candidate > value) {
          value = candidate;
          arg = e;
        }
      }
      cur[d] = value;
      from[d] = arg;
    });
  }

  CoverageResult out;
  int best_layer = 0;
  int best_end = -1;
  for (int j = 1; j <= layers; ++j) {
    for (int d = 0; d < useful; ++d) {
      const long v = best[static_cast<std::size_t>(j) * width + d];
      if (v > out.coverage) {
        out.coverage = v;
        best_layer = j;
        best_end = d;
      }
    }
  }
  std::vector<char> taken(entries, 0);
  for (int j = best_layer, d = best_end; j >= 1; --j) {
    taken[d] = 1;
    d = parent[static_cast<std::size_t>(j) * width + d];
  }
  int padding = k - best_layer;
  for (int e = 0; e < entries && padding > 0; ++e) {
    if (!taken[e]) {
      taken[e] = 1;
      --padding;
    }
  }
  for (int e = 0; e < entries; ++e) {
    if (taken[e]) out.chosen.push_back(e + 1);
  }
  return out;
}

long interval_coverage(const IntervalInstance& inst, const std::vector<int>& chosen) {
  if (inst.kind == AxisKind::sp) {
    long hit = 0;
    for (const auto& iv : inst.intervals) {
      if (iv && std::any_of(chosen.begin(), chosen.end(), [&](int p) { return iv->contains(p); })) ++hit;
    }
    return hit;
  }
  std::vector<char> covered(inst.universe_size + 1, 0);
  for (int e : chosen) {
    if (const auto& iv = inst.intervals.at(e - 1)) {
      for (int x = iv->start; x <= iv->end; ++x) covered[x] = 1;
    }
  }
  return std::count(covered.begin(), covered.end(), 1);
}

std::vector<Candidate> witness_candidates(const IntervalInstance& inst, const Axis& axis, const CoverageResult& r) {
  std::vector<Candidate> out;
  for (int x : r.chosen) out.push_back(inst.kind == AxisKind::sp ? axis.order.at(x - 1) : inst.owners.at(x - 1));
  std::sort(out.begin(), out.end());
  return out;
}

long cc_coverage(const Election& e, const std::vector<Candidate>& committee) {
  long hit = 0;
  for (const Ballot& b : e.ballots()) {
    if (std::any_of(committee.begin(), committee.end(),
                    [&](Candidate c) { return std::binary_search(b.begin(), b.end(), c); })) {
      ++hit;
    }
  }
  return hit;
}

BruteCCResult brute_cc(const Election& e, std::uint64_t cap) {
  const int m = e.num_candidates();
  const int k = e.committee_size();
  // C(m, k), saturating at cap + 1.
  std::uint64_t subsets = 1;
  for (int i = 1; i <= k; ++i) {
    subsets = subsets * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
    if (subsets > cap) throw PreconditionError("brute-force CC exceeds the enumeration cap");
  }

  const int n = e.num_voters();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> covers(m, std::vector<std::uint64_t>(words, 0));
  for (Candidate c = 1; c <= m; ++c) {
    for (Voter i : e.approvers(c)) covers[c - 1][(i - 1) / 64] |= std::uint64_t{1} << ((i - 1) % 64);
  }

  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  BruteCCResult out{-1, {}};
  std::vector<std::uint64_t> acc(words);
  for (;;) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int c : combo) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= covers[c][w];
    }
    long value = 0;
    for (auto w : acc) value += std::popcount(w);
    if (value > out.coverage) {
      out.coverage = value;
      out.committee.members.clear();
      for (int c : combo) out.committee.members.push_back(c + 1);
    }
    int i = k - 1;
    while (i >= 0 && combo[i] == m - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return out;
}

}  // namespace abc
