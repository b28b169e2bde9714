#include "abc/election.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace abc {

Election::Election(int num_candidates, int committee_size, std::vector<Ballot> ballots)
    : num_candidates_(num_candidates), committee_size_(committee_size), ballots_(std::move(ballots)) {
  if (num_candidates_ < 1) throw PreconditionError("election needs at least one candidate");
  if (committee_size_ < 1 || committee_size_ > num_candidates_) {
    throw PreconditionError("committee size " + std::to_string(committee_size_) + " outside [1, " +
                            std::to_string(num_candidates_) + "]");
  }
  approvers_.assign(num_candidates_, {});
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    Ballot& b = ballots_[i];
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw PreconditionError("ballot " + std::to_string(i + 1) + " repeats a candidate");
    }
    for (Candidate c : b) {
      if (c < 1 || c > num_candidates_) {
        throw PreconditionError("ballot " + std::to_string(i + 1) + " approves candidate " + std::to_string(c) +
                                " outside [1, " + std::to_string(num_candidates_) + "]");
      }
      approvers_[c - 1].push_back(static_cast<Voter>(i + 1));
    }
  }
}

Election Election::with_committee_size(int committee_size) const {
  return Election(num_candidates_, committee_size, ballots_);
}

namespace {

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

int parse_header_field(std::istream& in, std::string_view key, int line) {
  std::string raw;
  if (!std::getline(in, raw)) throw ParseError(line, "missing '" + std::string(key) + ":' header");
  std::string_view text = strip_cr(raw);
  const std::string prefix = std::string(key) + ":";
  if (text.substr(0, prefix.size()) != prefix) {
    throw ParseError(line, "expected '" + prefix + " <n>', got '" + std::string(text) + "'");
  }
  text.remove_prefix(prefix.size());
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  return parse_int(text, line);
}

}  // namespace

Election parse_election(std::istream& in) {
  std::string raw;
  if (!std::getline(in, raw) || strip_cr(raw) != "abce 1") throw ParseError(1, "expected header 'abce 1'");
  const int m = parse_header_field(in, "candidates", 2);
  const int k = parse_header_field(in, "committee", 3);
  const int n = parse_header_field(in, "ballots", 4);
  if (m < 1) throw ParseError(2, "candidate count must be positive");
  if (k < 1) throw ParseError(3, "committee size must be positive");
  if (k > m) throw ParseError(3, "committee size " + std::to_string(k) + " exceeds candidate count " + std::to_string(m));
  if (n < 0) throw ParseError(4, "ballot count must be non-negative");

  std::vector<Ballot> ballots;
  ballots.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int line = 5 + i;
    if (!std::getline(in, raw)) {
      throw ParseError(line, "expected " + std::to_string(n) + " ballots, found " + std::to_string(i));
    }
    std::istringstream tokens{std::string(strip_cr(raw))};
    Ballot ballot;
    std::string token;
    while (tokens >> token) {
      const int c = parse_int(token, line);
      if (c < 1 || c > m) {
        throw ParseError(line, "candidate " + std::to_string(c) + " outside [1, " + std::to_string(m) + "]");
      }
      ballot.push_back(c);
    }
    std::sort(ballot.begin(), ballot.end());
    if (std::adjacent_find(ballot.begin(), ballot.end()) != ballot.end()) {
      throw ParseError(line, "repeated candidate in ballot");
    }
    ballots.push_back(std::move(ballot));
  }
  int line = 5 + n;
  while (std::getline(in, raw)) {
    std::string_view text = strip_cr(raw);
    if (!text.empty() && text.substr(0, 14) != "distinguished=") {
      throw ParseError(line, "unexpected content after the last ballot");
    }
    ++line;
  }
  return Election(m, k, std::move(ballots));
}

Election parse_election_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_election(in);
}

void write_election(std::ostream& out, const Election& e) {
  out << "abce 1\n"
      << "candidates: " << e.num_candidates() << "\n"
      << "committee: " << e.committee_size() << "\n"
      << "ballots: " << e.num_voters() << "\n";
  for (const Ballot& b : e.ballots()) out << format_members(b) << "\n";
}

std::string election_to_string(const Election& e) {
  std::ostringstream out;
  write_election(out, e);
  return out.str();
}

std::vector<long> approval_scores(const Election& e) {
  std::vector<long> scores(e.num_candidates());
  for (Candidate c = 1; c <= e.num_candidates(); ++c) scores[c - 1] = static_cast<long>(e.approvers(c).size());
  return scores;
}

std::string format_members(const std::vector<Candidate>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(members[i]);
  }
  return out;
}

}  // namespace abc
