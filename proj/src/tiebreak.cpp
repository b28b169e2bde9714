#include "abc/tiebreak.hpp"

#include <algorithm>
#include <stdexcept>

namespace abc {

ArgOpt lex_min_argopt(std::span<const ScoredCandidate> scored, Sense sense) {
  if (scored.empty()) throw std::invalid_argument("lex_min_argopt on an empty candidate list");
  const auto better = [sense](const Rational& a, const Rational& b) { return sense == Sense::max ? a > b : a < b; };
  Rational best = scored.front().value;
  for (const auto& s : scored) {
    if (better(s.value, best)) best = s.value;
  }
  ArgOpt out{0, {}, best};
  for (const auto& s : scored) {
    if (s.value == best) out.tied.push_back(s.candidate);
  }
  std::sort(out.tied.begin(), out.tied.end());
  out.chosen = out.tied.front();
  return out;
}

std::string format_trace_line(const RoundTrace& t) {
  std::string line = "round=" + std::to_string(t.round) + " chosen=" + std::to_string(t.chosen) +
                     " value=" + t.value.to_string() + " tied=";
  for (std::size_t i = 0; i < t.tied_candidates.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(t.tied_candidates[i]);
  }
  return line;
}

int count_tie_events(std::span<const RoundTrace> trace) {
  return static_cast<int>(std::count_if(trace.begin(), trace.end(), [](const RoundTrace& t) { return t.tie_broken(); }));
}

}  // namespace abc
