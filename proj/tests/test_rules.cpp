#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "abc/generators.hpp"
#include "abc/rules.hpp"
#include "fixtures.hpp"

using namespace abc;

namespace {

// Sort by (score desc, index asc), take k.
Committee naive_top_k(const std::vector<Rational>& scores, int k) {
  std::vector<Candidate> order(scores.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Candidate a, Candidate b) { return scores[a - 1] > scores[b - 1]; });
  order.resize(k);
  return Committee::from_unordered(order);
}

std::vector<Rational> naive_sav_scores(const Election& e) {
  std::vector<Rational> s(e.num_candidates(), 0);
  for (const Ballot& b : e.ballots()) {
    for (Candidate c : b) s[c - 1] += Rational(1, static_cast<long>(b.size()));
  }
  return s;
}

// Total Thiele score of a committee, from scratch.
Rational thiele_score(const Election& e, const ThieleWeight& w, const std::vector<Candidate>& committee) {
  Rational total = 0;
  for (const Ballot& b : e.ballots()) {
    int hits = 0;
    for (Candidate c : committee) hits += std::binary_search(b.begin(), b.end(), c) ? 1 : 0;
    for (int x = 1; x <= hits; ++x) total += w.gain(x);
  }
  return total;
}

std::vector<Candidate> naive_seq_thiele_order(const Election& e, const ThieleWeight& w) {
  std::vector<Candidate> chosen;
  for (int round = 0; round < e.committee_size(); ++round) {
    Candidate best = 0;
    Rational best_score;
    for (Candidate c = 1; c <= e.num_candidates(); ++c) {
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      auto with = chosen;
      with.push_back(c);
      const Rational s = thiele_score(e, w, with);
      if (best == 0 || s > best_score) {
        best = c;
        best_score = s;
      }
    }
    chosen.push_back(best);
  }
  return chosen;
}

std::vector<Candidate> naive_phragmen_order(const Election& e) {
  std::vector<Rational> y(e.num_voters(), 0);
  std::vector<Candidate> chosen;
  for (int round = 0; round < e.committee_size(); ++round) {
    Candidate best = 0;
    Rational best_load;
    for (Candidate c = 1; c <= e.num_candidates(); ++c) {
      if (e.approvers(c).empty() || std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      Rational sum = 1;
      for (Voter i : e.approvers(c)) sum += y[i - 1];
      const Rational load = sum / Rational(static_cast<long>(e.approvers(c).size()));
      if (best == 0 || load < best_load) {
        best = c;
        best_load = load;
      }
    }
    if (best == 0) break;
    for (Voter i : e.approvers(best)) y[i - 1] = best_load;
    chosen.push_back(best);
  }
  return chosen;
}

}  // namespace

TEST_CASE("approval voting") {
  CHECK(av(fixtures::example1()).committee.members == std::vector<Candidate>{1, 3});
  CHECK(av(Election(3, 2, {{}, {}})).committee.members == std::vector<Candidate>{1, 2});
  CHECK(av(Election(3, 1, {{2}})).committee.members == std::vector<Candidate>{2});
}

TEST_CASE("approval voting matches a naive sort") {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const Election e = random_election(rng, 10, 12);
    std::vector<Rational> scores;
    for (long s : approval_scores(e)) scores.emplace_back(s);
    CHECK(av(e).committee == naive_top_k(scores, e.committee_size()));
  }
}

TEST_CASE("satisfaction approval voting") {
  const ScoreResult r = sav(fixtures::example1());
  CHECK(r.committee.members == std::vector<Candidate>{1, 2});
  CHECK(r.scores == std::vector<Rational>{2, 2, 2});

  const ScoreResult one = sav(Election(3, 1, {{1, 2, 3}}));
  CHECK(one.committee.members == std::vector<Candidate>{1});
  CHECK(one.scores[0] == Rational(1, 3));

  const ScoreResult two = sav(Election(2, 1, {{1}, {2}, {2}}));
  CHECK(two.committee.members == std::vector<Candidate>{2});
  CHECK(two.scores[1] == Rational(2));

  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Election e = random_election(rng, 8, 10);
    CHECK(sav(e).committee == naive_top_k(naive_sav_scores(e), e.committee_size()));
  }
}

TEST_CASE("sequential Thiele") {
  const SequentialResult cc = seq_thiele(fixtures::example1(), ThieleWeight::cc(2));
  CHECK(cc.committee.members == std::vector<Candidate>{1, 3});
  CHECK(cc.order == std::vector<Candidate>{3, 1});
  REQUIRE(cc.trace.size() == 2);
  CHECK(cc.trace[0].value == Rational(4));
  CHECK(cc.trace[1].tied_candidates == std::vector<Candidate>{1, 2});

  const SequentialResult pav = seq_thiele(Election(2, 2, {{1, 2}, {1, 2}, {2}}), ThieleWeight::pav(2));
  CHECK(pav.order == std::vector<Candidate>{2, 1});
  CHECK(pav.trace[0].value == Rational(3));
  CHECK(pav.trace[1].value == Rational(1));

  const Election full = fixtures::example1(3);
  CHECK(seq_thiele(full, ThieleWeight::pav(3)).committee.members == std::vector<Candidate>{1, 2, 3});

  CHECK_THROWS_AS(seq_thiele(full, ThieleWeight::cc(2)), PreconditionError);
}

TEST_CASE("sequential Thiele against score recomputation") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Election e = random_election(rng, 7, 9);
    const int k = e.committee_size();
    for (const ThieleWeight& w : {ThieleWeight::cc(k), ThieleWeight::pav(k), ThieleWeight::from_epsilon(Rational(1, 2), k)}) {
      CHECK(seq_thiele(e, w).order == naive_seq_thiele_order(e, w));
    }
  }
}

TEST_CASE("sequential Thiele is invariant under positive scaling of the weights") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Election e = random_election(rng, 7, 9);
    const ThieleWeight w = ThieleWeight::pav(e.committee_size());
    const Rational factor(rng.between(1, 9), rng.between(1, 9));
    std::vector<Rational> scaled;
    for (const Rational& g : w.gains()) scaled.push_back(g * factor);
    CHECK(seq_thiele(e, ThieleWeight(scaled)).order == seq_thiele(e, w).order);
  }
}

TEST_CASE("reverse sequential Thiele") {
  const SequentialResult r = rev_seq_thiele(Election(2, 1, {{1}, {2}, {2}}), ThieleWeight::cc(2));
  CHECK(r.order == std::vector<Candidate>{1});
  CHECK(r.committee.members == std::vector<Candidate>{2});

  const SequentialResult empty = rev_seq_thiele(Election(3, 1, {{}, {}}), ThieleWeight::cc(3));
  CHECK(empty.order == std::vector<Candidate>{1, 2});
  CHECK(empty.committee.members == std::vector<Candidate>{3});

  const SequentialResult none = rev_seq_thiele(fixtures::example1(3), ThieleWeight::pav(3));
  CHECK(none.order.empty());
  CHECK(none.committee.members == std::vector<Candidate>{1, 2, 3});

  CHECK_THROWS_AS(rev_seq_thiele(fixtures::example1(), ThieleWeight::cc(2)), PreconditionError);
}

TEST_CASE("sequential Phragmen") {
  const Election e(3, 2, {{1, 2}, {1, 2}, {3}});
  const PhragmenResult r = seq_phragmen(e, std::nullopt, 2);
  CHECK(r.committee.members == std::vector<Candidate>{1, 2});
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].value == Rational(1, 2));
  CHECK(r.trace[1].value == Rational(1));
  CHECK(r.trace[1].tied_candidates == std::vector<Candidate>{2, 3});

  const PhragmenResult all = seq_phragmen(Election(2, 1, {{1}, {1}, {1, 2}, {1}}), std::nullopt, 1);
  CHECK(all.committee.members == std::vector<Candidate>{1});
  CHECK(all.trace[0].value == Rational(1, 4));

  // Candidate 2 has no approvers and is never elected.
  CHECK_THROWS_AS(seq_phragmen(Election(2, 2, {{1}}), std::nullopt, 2), PreconditionError);
}

TEST_CASE("sequential Phragmen against a naive simulation") {
  Rng rng(29);
  for (int i = 0; i < 300; ++i) {
    const Election e = random_election(rng, 7, 10);
    const auto expected = naive_phragmen_order(e);
    if (static_cast<int>(expected.size()) < e.committee_size()) continue;
    const PhragmenResult r = seq_phragmen(e, std::nullopt, e.committee_size());
    CHECK(r.state.elected == expected);
    // Starting from zero loads, the largest load after round r is ℓ_r(c_r).
    for (int seats = 1; seats <= e.committee_size(); ++seats) {
      const PhragmenResult prefix = seq_phragmen(e, std::nullopt, seats);
      CHECK(*std::max_element(prefix.state.loads.begin(), prefix.state.loads.end()) == prefix.trace.back().value);
    }
  }
}

TEST_CASE("greedy Monroe") {
  const MonroeResult r = greedy_monroe(Election(3, 2, {{1}, {1}, {2}, {3}}));
  CHECK(r.committee.members == std::vector<Candidate>{1, 2});
  CHECK(r.quota_schedule == std::vector<int>{2, 2});
  CHECK(r.represented[0] == std::vector<Voter>{1, 2});

  CHECK(monroe_quota_schedule(5, 2) == std::vector<int>{3, 2});
  CHECK(greedy_monroe(Election(4, 3, {{}, {}})).committee.members == std::vector<Candidate>{1, 2, 3});
}

TEST_CASE("greedy Monroe removes min(quota, remaining approvers) each round") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Election e = random_election(rng, 7, 12);
    const MonroeResult r = greedy_monroe(e);
    std::vector<char> represented(e.num_voters() + 1, 0);
    std::size_t removed = 0;
    for (std::size_t round = 0; round < r.order.size(); ++round) {
      long remaining = 0;
      for (Voter v : e.approvers(r.order[round])) remaining += represented[v] ? 0 : 1;
      CHECK(static_cast<long>(r.represented[round].size()) == std::min<long>(r.quota_schedule[round], remaining));
      for (Voter v : r.represented[round]) {
        CHECK(!represented[v]);
        represented[v] = 1;
      }
      removed += r.represented[round].size();
    }
    CHECK(removed <= static_cast<std::size_t>(e.num_voters()));
    CHECK(static_cast<int>(r.committee.size()) == e.committee_size());
  }
}

TEST_CASE("method of equal shares: worked example") {
  const MESResult r = mes_phase1(fixtures::mes_example());
  CHECK(r.committee.members == std::vector<Candidate>{1, 2});
  CHECK(r.short_committee);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].value == Rational(1, 3));
  CHECK(r.trace[1].value == Rational(7, 12));
  CHECK(r.state.budgets == std::vector<Rational>{Rational(5, 12), Rational(5, 12), 0, Rational(1, 6)});

  const MESPhragmenResult full = mes_seqp(fixtures::mes_example());
  CHECK(full.committee.members == std::vector<Candidate>{1, 2, 3});
  REQUIRE(full.phase2.has_value());
  REQUIRE(full.trace.size() == 3);
  CHECK(full.trace[2].chosen == 3);
  CHECK(full.trace[2].value == Rational(1, 12));
}

TEST_CASE("method of equal shares: small cases") {
  const MESResult all = mes_phase1(Election(2, 1, {{1}, {1}, {1, 2}}));
  CHECK(all.committee.members == std::vector<Candidate>{1});
  CHECK(all.trace[0].value == Rational(1, 3));

  // One approver holding k/n = 1/2 cannot pay for candidate 2.
  const MESResult poor = mes_phase1(Election(2, 1, {{1}, {2}}));
  CHECK(poor.committee.size() == 0);

  CHECK(mes_price({Rational(1, 2), Rational(1, 2)}) == Rational(1, 2));
  CHECK(mes_price({Rational(1, 6), Rational(1)}) == Rational(5, 6));
  CHECK(!mes_price({Rational(1, 3), Rational(1, 3)}).has_value());
}

TEST_CASE("method of equal shares: budget and price properties") {
  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    const Election e = random_election(rng, 7, 10);
    const MESResult r = mes_phase1(e);
    if (e.num_voters() == 0) continue;
    std::vector<Rational> budget(e.num_voters(), Rational(e.committee_size(), e.num_voters()));
    for (const RoundTrace& t : r.trace) {
      const Rational& rho = t.value;
      Rational paid = 0;
      Rational held = 0;
      bool someone_at_least_rho = false;
      for (Voter v : e.approvers(t.chosen)) {
        held += budget[v - 1];
        paid += min(budget[v - 1], rho);
        someone_at_least_rho = someone_at_least_rho || budget[v - 1] >= rho;
      }
      CHECK(held >= Rational(1));
      CHECK(paid == Rational(1));
      CHECK(someone_at_least_rho);  // no smaller price pays the cost
      Rational before = std::accumulate(budget.begin(), budget.end(), Rational(0));
      for (Voter v : e.approvers(t.chosen)) budget[v - 1] -= min(budget[v - 1], rho);
      CHECK(std::accumulate(budget.begin(), budget.end(), Rational(0)) == before - 1);
    }
    CHECK(budget == r.state.budgets);
    if (r.short_committee) {
      for (Candidate c = 1; c <= e.num_candidates(); ++c) {
        if (r.committee.contains(c)) continue;
        Rational held = 0;
        for (Voter v : e.approvers(c)) held += budget[v - 1];
        CHECK(held < Rational(1));
      }
    }
  }
}

TEST_CASE("MES completed by Phragmen equals phase one when phase one fills the committee") {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Election e = random_election(rng, 6, 10);
    const MESResult p1 = mes_phase1(e);
    if (p1.short_committee) continue;
    const MESPhragmenResult both = mes_seqp(e);
    CHECK(both.committee == p1.committee);
    CHECK(!both.phase2.has_value());
  }
}

TEST_CASE("every rule is a deterministic function of the election") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const Election e = random_election(rng, 7, 10);
    const ThieleWeight w = ThieleWeight::pav(e.num_candidates());
    for (const std::string& name : rule_names()) {
      RuleRun a;
      RuleRun b;
      try {
        a = run_rule(name, e, w);
      } catch (const PreconditionError&) {
        CHECK_THROWS_AS(run_rule(name, e, w), PreconditionError);
        continue;
      }
      b = run_rule(name, e, w);
      CHECK(a.committee == b.committee);
      REQUIRE(a.trace.size() == b.trace.size());
      for (std::size_t r = 0; r < a.trace.size(); ++r) CHECK(format_trace_line(a.trace[r]) == format_trace_line(b.trace[r]));
    }
  }
}

TEST_CASE("rule dispatch") {
  CHECK(rule_names().size() == 12);
  CHECK(run_rule("seq-cc", fixtures::example1()).committee.members == std::vector<Candidate>{1, 3});
  CHECK(run_rule("mes", fixtures::mes_example()).short_committee);
  CHECK_THROWS_AS(run_rule("seq-thiele", fixtures::example1()), PreconditionError);
  CHECK_THROWS_AS(run_rule("nope", fixtures::example1()), PreconditionError);
}
