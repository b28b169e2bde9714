#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abc {

/// Candidates are 1-based indices; ascending index order is the lexicographic order.
using Candidate = int;
/// Voters are 1-based ballot positions.
using Voter = int;
/// An approval ballot, strictly ascending.
using Ballot = std::vector<Candidate>;

/// Malformed input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A rule or constructor was invoked outside its domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An approval election: m candidates, committee size k, ordered ballots.
///
/// Immutable after construction. The approver lists N(c) are derived once and
/// shared by every rule.
class Election {
 public:
  /// Validates 1 <= k <= m and that every ballot index lies in [1, m].
  /// Ballots are sorted; a repeated index is rejected.
  Election(int num_candidates, int committee_size, std::vector<Ballot> ballots);

  int num_candidates() const { return num_candidates_; }
  int committee_size() const { return committee_size_; }
  int num_voters() const { return static_cast<int>(ballots_.size()); }

  const std::vector<Ballot>& ballots() const { return ballots_; }
  const Ballot& ballot(Voter voter) const { return ballots_[voter - 1]; }

  /// N(c): voters approving c, ascending.
  const std::vector<Voter>& approvers(Candidate c) const { return approvers_[c - 1]; }

  /// Same ballots and candidates, different committee size.
  Election with_committee_size(int committee_size) const;

  friend bool operator==(const Election& a, const Election& b) {
    return a.num_candidates_ == b.num_candidates_ && a.committee_size_ == b.committee_size_ &&
           a.ballots_ == b.ballots_;
  }

 private:
  int num_candidates_;
  int committee_size_;
  std::vector<Ballot> ballots_;
  std::vector<std::vector<Voter>> approvers_;
};

/// Parses the `abce 1` format. Lines after the last ballot must be blank or a
/// `distinguished=` sidecar line as written by the reduction tool.
Election parse_election(std::istream& in);
Election parse_election_text(std::string_view text);

void write_election(std::ostream& out, const Election& e);
std::string election_to_string(const Election& e);

/// Approval count of every candidate, indexed by candidate - 1.
std::vector<long> approval_scores(const Election& e);

/// Space-separated ascending indices.
std::string format_members(const std::vector<Candidate>& members);

}  // namespace abc
