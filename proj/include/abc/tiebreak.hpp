#pragma once

#include <span>
#include <string>
#include <vector>

#include "abc/election.hpp"
#include "abc/rational.hpp"

namespace abc {

enum class Sense { min, max };

struct ScoredCandidate {
  Candidate candidate;
  Rational value;
};

struct ArgOpt {
  Candidate chosen;
  /// Every candidate attaining the optimum, ascending. chosen == tied.front().
  std::vector<Candidate> tied;
  Rational value;
};

/// Optimum of `scored` under `sense`; ties go to the smallest index.
/// Throws std::invalid_argument on an empty list.
ArgOpt lex_min_argopt(std::span<const ScoredCandidate> scored, Sense sense);

/// One round of a sequential rule.
struct RoundTrace {
  int round;
  Candidate chosen;
  Rational value;
  std::vector<Candidate> tied_candidates;

  bool tie_broken() const { return tied_candidates.size() >= 2; }
};

/// `round=<r> chosen=<c> value=<p/q> tied=<c1,c2,...>`
std::string format_trace_line(const RoundTrace& t);

/// Number of rounds in which lexicographic tie-breaking decided the outcome.
int count_tie_events(std::span<const RoundTrace> trace);

}  // namespace abc
