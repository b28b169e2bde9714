#include "abc/rules.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace abc {

bool Committee::contains(Candidate c) const { return std::binary_search(members.begin(), members.end(), c); }

Committee Committee::from_unordered(std::vector<Candidate> members) {
  std::sort(members.begin(), members.end());
  return Committee{std::move(members)};
}

// ---------------------------------------------------------------------------
// Thiele weights

ThieleWeight::ThieleWeight(std::vector<Rational> marginal_gains) : gains_(std::move(marginal_gains)) {
  for (const auto& g : gains_) {
    if (g.sign() < 0) throw PreconditionError("Thiele marginal gains must be non-negative");
  }
}

ThieleWeight ThieleWeight::cc(int length) {
  std::vector<Rational> g(std::max(length, 0), Rational(0));
  if (!g.empty()) g[0] = 1;
  return ThieleWeight(std::move(g));
}

ThieleWeight ThieleWeight::pav(int length) {
  std::vector<Rational> g;
  for (int x = 1; x <= length; ++x) g.emplace_back(1, x);
  return ThieleWeight(std::move(g));
}

ThieleWeight ThieleWeight::from_epsilon(const Rational& eps, int length) {
  std::vector<Rational> g(std::max(length, 0), Rational(0));
  if (g.size() > 0) g[0] = 1;
  if (g.size() > 1) g[1] = eps;
  return ThieleWeight(std::move(g));
}

// ---------------------------------------------------------------------------
// AV / SAV

namespace {

// Rank-counting top-k with a constant working set: every score is recomputed
// on demand, nothing but the current pair is stored.
template <typename ScoreFn>
std::vector<Candidate> rank_counting_top_k(int m, int k, ScoreFn&& score) {
  std::vector<Candidate> out;
  for (Candidate c = 1; c <= m; ++c) {
    const auto cvotes = score(c);
    int rank = 0;
    for (Candidate d = 1; d <= m; ++d) {
      const auto dvotes = score(d);
      if (cvotes > dvotes || (cvotes == dvotes && c < d)) ++rank;
    }
    // c outranks at least m - k others exactly when it is among the top k.
    if (rank >= m - k) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> sorted_top_k(const std::vector<Rational>& scores, int k) {
  std::vector<Candidate> order(scores.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Candidate a, Candidate b) { return scores[a - 1] > scores[b - 1]; });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

ScoreResult checked_top_k(const Election& e, const std::function<Rational(Candidate)>& score) {
  const int m = e.num_candidates();
  const int k = e.committee_size();
  std::vector<Candidate> streamed = rank_counting_top_k(m, k, score);
  ScoreResult out;
  for (Candidate c = 1; c <= m; ++c) out.scores.push_back(score(c));
  if (streamed != sorted_top_k(out.scores, k)) {
    throw std::logic_error("rank-counting and sorted top-k disagree");
  }
  out.committee = Committee{std::move(streamed)};
  return out;
}

}  // namespace

ScoreResult av(const Election& e) {
  return checked_top_k(e, [&e](Candidate c) {
    long votes = 0;
    for (const Ballot& b : e.ballots()) votes += std::binary_search(b.begin(), b.end(), c) ? 1 : 0;
    return Rational(votes);
  });
}

ScoreResult sav(const Election& e) {
  return checked_top_k(e, [&e](Candidate c) {
    Rational s;
    for (const Ballot& b : e.ballots()) {
      if (std::binary_search(b.begin(), b.end(), c)) s += Rational(1, static_cast<long>(b.size()));
    }
    return s;
  });
}

// ---------------------------------------------------------------------------
// Sequential Thiele methods

SequentialResult seq_thiele(const Election& e, const ThieleWeight& w) {
  const int m = e.num_candidates();
  const int k = e.committee_size();
  if (w.length() < k) throw PreconditionError("Thiele weight table shorter than the committee size");

  std::vector<int> satisfaction(e.num_voters(), 0);
  std::vector<bool> elected(m + 1, false);
  SequentialResult out;
  std::vector<ScoredCandidate> scored;
  for (int round = 1; round <= k; ++round) {
    scored.clear();
    for (Candidate c = 1; c <= m; ++c) {
      if (elected[c]) continue;
      Rational gain;
      for (Voter i : e.approvers(c)) gain += w.gain(satisfaction[i - 1] + 1);
      scored.push_back({c, std::move(gain)});
    }
    ArgOpt best = lex_min_argopt(scored, Sense::max);
    elected[best.chosen] = true;
    for (Voter i : e.approvers(best.chosen)) ++satisfaction[i - 1];
    out.order.push_back(best.chosen);
    out.trace.push_back({round, best.chosen, best.value, std::move(best.tied)});
  }
  out.committee = Committee::from_unordered(out.order);
  return out;
}

SequentialResult rev_seq_thiele(const Election& e, const ThieleWeight& w) {
  const int m = e.num_candidates();
  const int k = e.committee_size();
  if (w.length() < m) throw PreconditionError("reverse Thiele needs marginal gains up to the candidate count");

  std::vector<int> satisfaction(e.num_voters());
  for (Voter i = 1; i <= e.num_voters(); ++i) satisfaction[i - 1] = static_cast<int>(e.ballot(i).size());
  std::vector<bool> present(m + 1, true);
  SequentialResult out;
  std::vector<ScoredCandidate> scored;
  for (int round = 1; round <= m - k; ++round) {
    scored.clear();
    for (Candidate c = 1; c <= m; ++c) {
      if (!present[c]) continue;
      Rational loss;
      for (Voter i : e.approvers(c)) loss += w.gain(satisfaction[i - 1]);
      scored.push_back({c, std::move(loss)});
    }
    ArgOpt best = lex_min_argopt(scored, Sense::min);
    present[best.chosen] = false;
    for (Voter i : e.approvers(best.chosen)) --satisfaction[i - 1];
    out.order.push_back(best.chosen);
    out.trace.push_back({round, best.chosen, best.value, std::move(best.tied)});
  }
  for (Candidate c = 1; c <= m; ++c) {
    if (present[c]) out.committee.members.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// seq-Phragmén

PhragmenResult seq_phragmen(const Election& e, std::optional<std::vector<Rational>> initial_loads, int seats,
                            const std::vector<Candidate>& excluded) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  PhragmenResult out;
  out.state.loads = initial_loads ? std::move(*initial_loads) : std::vector<Rational>(n, Rational(0));
  if (static_cast<int>(out.state.loads.size()) != n) throw PreconditionError("initial loads must have one entry per voter");

  std::vector<bool> available(m + 1, false);
  int electable = 0;
  for (Candidate c = 1; c <= m; ++c) {
    available[c] = !e.approvers(c).empty();
  }
  for (Candidate c : excluded) available.at(c) = false;
  for (Candidate c = 1; c <= m; ++c) electable += available[c] ? 1 : 0;
  if (seats < 0 || electable < seats) {
    throw PreconditionError("seq-Phragmén needs " + std::to_string(seats) + " electable candidates, only " +
                            std::to_string(electable) + " have approvers");
  }

  std::vector<ScoredCandidate> scored;
  for (int round = 1; round <= seats; ++round) {
    scored.clear();
    for (Candidate c = 1; c <= m; ++c) {
      if (!available[c]) continue;
      const auto& voters = e.approvers(c);
      Rational total(1);
      for (Voter i : voters) total += out.state.loads[i - 1];
      scored.push_back({c, total / Rational(static_cast<long>(voters.size()))});
    }
    ArgOpt best = lex_min_argopt(scored, Sense::min);
    available[best.chosen] = false;
    for (Voter i : e.approvers(best.chosen)) out.state.loads[i - 1] = best.value;
    out.state.elected.push_back(best.chosen);
    out.trace.push_back({round, best.chosen, best.value, std::move(best.tied)});
  }
  out.committee = Committee::from_unordered(out.state.elected);
  return out;
}

// ---------------------------------------------------------------------------
// Greedy Monroe

std::vector<int> monroe_quota_schedule(int num_voters, int committee_size) {
  const int d = num_voters % committee_size;
  const int base = num_voters / committee_size;
  std::vector<int> q(committee_size, base);
  for (int r = 0; r < d; ++r) q[r] = base + 1;
  return q;
}

MonroeResult greedy_monroe(const Election& e) {
  const int m = e.num_candidates();
  const int k = e.committee_size();
  MonroeResult out;
  out.quota_schedule = monroe_quota_schedule(e.num_voters(), k);
  std::vector<bool> unrepresented(e.num_voters(), true);
  std::vector<bool> elected(m + 1, false);
  std::vector<ScoredCandidate> scored;
  for (int round = 1; round <= k; ++round) {
    scored.clear();
    for (Candidate c = 1; c <= m; ++c) {
      if (elected[c]) continue;
      long support = 0;
      for (Voter i : e.approvers(c)) support += unrepresented[i - 1] ? 1 : 0;
      scored.push_back({c, Rational(support)});
    }
    ArgOpt best = lex_min_argopt(scored, Sense::max);
    elected[best.chosen] = true;
    // Lowest-index approvers first; a candidate with no remaining support
    // represents nobody.
    std::vector<Voter> group;
    const auto quota = static_cast<std::size_t>(out.quota_schedule[round - 1]);
    for (Voter i : e.approvers(best.chosen)) {
      if (group.size() == quota) break;
      if (unrepresented[i - 1]) group.push_back(i);
    }
    for (Voter i : group) unrepresented[i - 1] = false;
    out.represented.push_back(std::move(group));
    out.order.push_back(best.chosen);
    out.trace.push_back({round, best.chosen, best.value, std::move(best.tied)});
  }
  out.committee = Committee::from_unordered(out.order);
  return out;
}

// ---------------------------------------------------------------------------
// Method of Equal Shares

std::optional<Rational> mes_price(std::vector<Rational> budgets) {
  std::sort(budgets.begin(), budgets.end());
  Rational remaining(1);
  Rational total;
  for (const auto& b : budgets) total += b;
  if (total < Rational(1)) return std::nullopt;
  // Voters below the price pay everything they have; the rest split what is left.
  const auto t = static_cast<long>(budgets.size());
  for (long j = 0; j < t; ++j) {
    Rational rho = remaining / Rational(t - j);
    if (rho <= budgets[j]) return rho;
    remaining -= budgets[j];
  }
  return std::nullopt;  // unreachable when total >= 1
}

MESResult mes_phase1(const Election& e) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  const int k = e.committee_size();
  MESResult out;
  if (n > 0) out.state.budgets.assign(n, Rational(k, n));
  std::vector<bool> elected(m + 1, false);
  std::vector<ScoredCandidate> scored;
  std::vector<Rational> approver_budgets;
  while (static_cast<int>(out.state.elected.size()) < k) {
    scored.clear();
    for (Candidate c = 1; c <= m; ++c) {
      if (elected[c]) continue;
      approver_budgets.clear();
      for (Voter i : e.approvers(c)) approver_budgets.push_back(out.state.budgets[i - 1]);
      if (auto rho = mes_price(approver_budgets)) scored.push_back({c, std::move(*rho)});
    }
    if (scored.empty()) break;
    ArgOpt best = lex_min_argopt(scored, Sense::min);
    elected[best.chosen] = true;
    for (Voter i : e.approvers(best.chosen)) {
      Rational& x = out.state.budgets[i - 1];
      x -= min(x, best.value);
    }
    ++out.state.round;
    out.state.elected.push_back(best.chosen);
    out.trace.push_back({out.state.round, best.chosen, best.value, std::move(best.tied)});
  }
  out.short_committee = static_cast<int>(out.state.elected.size()) < k;
  out.committee = Committee::from_unordered(out.state.elected);
  return out;
}

MESPhragmenResult mes_seqp(const Election& e) {
  MESPhragmenResult out;
  out.phase1 = mes_phase1(e);
  out.trace = out.phase1.trace;
  std::vector<Candidate> members = out.phase1.state.elected;
  const int missing = e.committee_size() - static_cast<int>(members.size());
  if (missing > 0) {
    std::vector<Rational> loads;
    for (const auto& x : out.phase1.state.budgets) loads.push_back(-x);
    if (loads.empty()) loads.assign(e.num_voters(), Rational(0));
    out.phase2 = seq_phragmen(e, std::move(loads), missing, members);
    const int offset = static_cast<int>(out.trace.size());
    for (RoundTrace t : out.phase2->trace) {
      t.round += offset;
      out.trace.push_back(std::move(t));
    }
    members.insert(members.end(), out.phase2->state.elected.begin(), out.phase2->state.elected.end());
  }
  out.committee = Committee::from_unordered(std::move(members));
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {"av",          "sav",           "seq-cc",         "seq-pav",
                                                 "seq-thiele",  "rev-seq-cc",    "rev-seq-pav",    "rev-seq-thiele",
                                                 "seq-phragmen", "greedy-monroe", "mes",           "mes-phragmen"};
  return names;
}

RuleRun run_rule(const std::string& name, const Election& e, const std::optional<ThieleWeight>& weights) {
  const int k = e.committee_size();
  const int m = e.num_candidates();
  const auto need_weights = [&]() -> const ThieleWeight& {
    if (!weights) throw PreconditionError("rule '" + name + "' needs a weight file");
    return *weights;
  };
  if (name == "av") return {av(e).committee, {}, false};
  if (name == "sav") return {sav(e).committee, {}, false};
  if (name == "seq-cc") {
    auto r = seq_thiele(e, ThieleWeight::cc(k));
    return {r.committee, r.trace, false};
  }
  if (name == "seq-pav") {
    auto r = seq_thiele(e, ThieleWeight::pav(k));
    return {r.committee, r.trace, false};
  }
  if (name == "seq-thiele") {
    auto r = seq_thiele(e, need_weights());
    return {r.committee, r.trace, false};
  }
  if (name == "rev-seq-cc") {
    auto r = rev_seq_thiele(e, ThieleWeight::cc(m));
    return {r.committee, r.trace, false};
  }
  if (name == "rev-seq-pav") {
    auto r = rev_seq_thiele(e, ThieleWeight::pav(m));
    return {r.committee, r.trace, false};
  }
  if (name == "rev-seq-thiele") {
    auto r = rev_seq_thiele(e, need_weights());
    return {r.committee, r.trace, false};
  }
  if (name == "seq-phragmen") {
    auto r = seq_phragmen(e, std::nullopt, k);
    return {r.committee, r.trace, false};
  }
  if (name == "greedy-monroe") {
    auto r = greedy_monroe(e);
    return {r.committee, r.trace, false};
  }
  if (name == "mes") {
    auto r = mes_phase1(e);
    return {r.committee, r.trace, r.short_committee};
  }
  if (name == "mes-phragmen") {
    auto r = mes_seqp(e);
    return {r.committee, r.trace, false};
  }
  throw PreconditionError("unknown rule '" + name + "'");
}

}  // namespace abc
