#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abc/election.hpp"
#include "abc/rational.hpp"
#include "abc/tiebreak.hpp"

namespace abc {

struct Committee {
  std::vector<Candidate> members;  // ascending

  bool contains(Candidate c) const;
  std::size_t size() const { return members.size(); }
  std::string to_string() const { return format_members(members); }

  static Committee from_unordered(std::vector<Candidate> members);
  friend bool operator==(const Committee&, const Committee&) = default;
};

/// Marginal gains Δw(x) = w(x) - w(x-1) of a Thiele weight, x = 1..size().
class ThieleWeight {
 public:
  /// Throws PreconditionError if any gain is negative.
  explicit ThieleWeight(std::vector<Rational> marginal_gains);

  /// Δw = (1, 0, 0, ...).
  static ThieleWeight cc(int length);
  /// Δw = (1, 1/2, 1/3, ...).
  static ThieleWeight pav(int length);
  /// Δw = (1, eps, 0, 0, ...): w(1) = 1, w(2) = 1 + eps.
  static ThieleWeight from_epsilon(const Rational& eps, int length);

  int length() const { return static_cast<int>(gains_.size()); }
  /// Δw(x), 1 <= x <= length().
  const Rational& gain(int x) const { return gains_[x - 1]; }
  const std::vector<Rational>& gains() const { return gains_; }

 private:
  std::vector<Rational> gains_;
};

struct SequentialResult {
  Committee committee;
  std::vector<Candidate> order;  // election (or removal) order
  std::vector<RoundTrace> trace;
};

struct ScoreResult {
  Committee committee;
  std::vector<Rational> scores;  // indexed by candidate - 1
};

/// Approval Voting via the constant-working-set rank-counting loop. The result
/// is cross-checked against a sort of approval_scores; disagreement throws
/// std::logic_error.
ScoreResult av(const Election& e);
/// Satisfaction Approval Voting: score(c) = Σ_{v ∋ c} 1/|v|.
ScoreResult sav(const Election& e);

/// seq-w-Thiele. Requires w.length() >= k.
SequentialResult seq_thiele(const Election& e, const ThieleWeight& w);
/// rev-seq-w-Thiele. Requires w.length() >= m. `order` lists removals.
SequentialResult rev_seq_thiele(const Election& e, const ThieleWeight& w);

struct PhragmenState {
  std::vector<Rational> loads;  // y(i), indexed by voter - 1
  std::vector<Candidate> elected;
};

struct PhragmenResult {
  Committee committee;
  PhragmenState state;
  std::vector<RoundTrace> trace;
};

/// seq-Phragmén for `seats` rounds. Candidates in `excluded` or without
/// approvers are never considered. Throws PreconditionError when fewer than
/// `seats` candidates are electable.
PhragmenResult seq_phragmen(const Election& e, std::optional<std::vector<Rational>> initial_loads, int seats,
                            const std::vector<Candidate>& excluded = {});

struct MonroeResult {
  Committee committee;
  std::vector<Candidate> order;
  std::vector<RoundTrace> trace;
  std::vector<int> quota_schedule;
  std::vector<std::vector<Voter>> represented;  // G_r per round
};

/// ⌈n/k⌉ for the first n mod k rounds, ⌊n/k⌋ afterwards.
std::vector<int> monroe_quota_schedule(int num_voters, int committee_size);
MonroeResult greedy_monroe(const Election& e);

struct MESState {
  std::vector<Rational> budgets;  // x_r(i), indexed by voter - 1
  std::vector<Candidate> elected;
  int round = 0;
};

struct MESResult {
  Committee committee;
  MESState state;
  std::vector<RoundTrace> trace;  // value = ρ of the elected candidate
  bool short_committee = false;   // stopped before k seats
};

/// ρ_c: the least ρ with Σ min(budget_i, ρ) = 1, or nullopt when Σ budget_i < 1.
std::optional<Rational> mes_price(std::vector<Rational> approver_budgets);

/// First phase of the Method of Equal Shares; may return fewer than k members.
MESResult mes_phase1(const Election& e);

struct MESPhragmenResult {
  Committee committee;
  MESResult phase1;
  std::optional<PhragmenResult> phase2;
  std::vector<RoundTrace> trace;  // phase 1 rounds then phase 2 rounds
};

/// MES completed by seq-Phragmén with y_0(i) = -x_{k'}(i).
MESPhragmenResult mes_seqp(const Election& e);

/// CLI identifiers: av, sav, seq-cc, seq-pav, seq-thiele, rev-seq-cc, rev-seq-pav,
/// rev-seq-thiele, seq-phragmen, greedy-monroe, mes, mes-phragmen.
const std::vector<std::string>& rule_names();

struct RuleRun {
  Committee committee;
  std::vector<RoundTrace> trace;
  bool short_committee = false;
};

/// Dispatches by CLI identifier. `weights` is required for seq-thiele and
/// rev-seq-thiele and ignored otherwise.
RuleRun run_rule(const std::string& name, const Election& e, const std::optional<ThieleWeight>& weights = {});

}  // namespace abc
