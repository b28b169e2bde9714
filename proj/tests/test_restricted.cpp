#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "abc/axis.hpp"
#include "abc/cc_solvers.hpp"
#include "abc/generators.hpp"
#include "abc/intervals.hpp"
#include "abc/optl.hpp"
#include "fixtures.hpp"

using namespace abc;

namespace {

bool some_permutation_works(const Election& e, AxisKind kind) {
  const int size = kind == AxisKind::sp ? e.num_candidates() : e.num_voters();
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 1);
  do {
    if (axis_is_valid(e, Axis{kind, order})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Unconstrained random election, small enough for the permutation check.
Election tiny_election(Rng& rng) {
  const int m = rng.between(1, 6);
  const int n = rng.between(1, 6);
  std::vector<Ballot> ballots(n);
  for (auto& b : ballots) {
    for (Candidate c = 1; c <= m; ++c) {
      if (rng.coin(2, 5)) b.push_back(c);
    }
  }
  return Election(m, rng.between(1, m), std::move(ballots));
}

mpz_class from_bits(const std::string& bits) { return mpz_class(bits, 2); }

}  // namespace

TEST_CASE("axis recognition on the figure election") {
  const Election e = fixtures::figure6();
  const auto sp = find_axis(e, AxisKind::sp);
  REQUIRE(sp.has_value());
  CHECK(axis_is_valid(e, *sp));
  CHECK(axis_is_valid(e, Axis{AxisKind::sp, {1, 2, 3, 4}}));
  // The printed axis c b a d splits {b, c, d}.
  CHECK(!axis_is_valid(e, Axis{AxisKind::sp, {3, 2, 1, 4}}));

  const auto sc = find_axis(e, AxisKind::sc);
  REQUIRE(sc.has_value());
  CHECK(axis_is_valid(e, *sc));
  CHECK(axis_is_valid(e, Axis{AxisKind::sc, {1, 2, 3, 4}}));
}

TEST_CASE("axis recognition rejects a triangle") {
  const Election e(3, 1, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(!find_axis(e, AxisKind::sp).has_value());
  CHECK(!some_permutation_works(e, AxisKind::sp));
  CHECK(format_axis(Axis{AxisKind::sp, {2, 1, 3}}) == "2 1 3");
}

TEST_CASE("axis recognition agrees with exhaustive permutation search") {
  Rng rng(73);
  int negatives = 0;
  for (int i = 0; i < 1500; ++i) {
    const Election e = tiny_election(rng);
    for (AxisKind kind : {AxisKind::sp, AxisKind::sc}) {
      const auto axis = find_axis(e, kind);
      if (axis) {
        CHECK(axis_is_valid(e, *axis));
      } else {
        ++negatives;
        CHECK(!some_permutation_works(e, kind));
      }
    }
  }
  CHECK(negatives > 100);
}

TEST_CASE("planted axes are always found") {
  Rng rng(79);
  for (int i = 0; i < 300; ++i) {
    CHECK(find_axis(random_sp_election(rng, 12, 12), AxisKind::sp).has_value());
    CHECK(find_axis(random_sc_election(rng, 12, 12), AxisKind::sc).has_value());
  }
}

TEST_CASE("consecutive ones") {
  CHECK(consecutive_ones_order(4, {{0, 1}, {1, 2}, {2, 3}}).has_value());
  CHECK(!consecutive_ones_order(4, {{0, 1}, {1, 2}, {0, 2}}).has_value());
  CHECK(!consecutive_ones_order(4, {{0, 1}, {0, 2}, {0, 3}}).has_value());
  CHECK(consecutive_ones_order(1, {}).has_value());
}

TEST_CASE("interval view") {
  const Election e(3, 1, {{1, 2, 3}, {}});
  const IntervalInstance inst = to_intervals(e, Axis{AxisKind::sp, {2, 1, 3}});
  REQUIRE(inst.num_entries() == 2);
  CHECK(inst.intervals[0] == Interval{1, 3});
  CHECK(!inst.intervals[1].has_value());

  const Election fig = fixtures::figure6();
  const IntervalInstance sc = to_intervals(fig, Axis{AxisKind::sc, {1, 2, 3, 4}});
  // a: voters 1-2, b: 2-3, c: 3-4, d: 3-4.
  CHECK(sc.intervals == std::vector<std::optional<Interval>>{Interval{1, 2}, Interval{2, 3}, Interval{3, 4}, Interval{3, 4}});
  CHECK(sc.owners == std::vector<int>{1, 2, 3, 4});

  CHECK_THROWS_AS(to_intervals(fig, Axis{AxisKind::sp, {3, 2, 1, 4}}), PreconditionError);

  const IntervalInstance sorted = make_sc_instance(5, {Interval{3, 4}, std::nullopt, Interval{1, 5}}, 1);
  CHECK(sorted.owners == std::vector<int>{3, 1, 2});
}

TEST_CASE("brute-force CC") {
  const BruteCCResult r = brute_cc(fixtures::example1());
  CHECK(r.coverage == 6);
  CHECK(r.committee.members == std::vector<Candidate>{1, 2});

  const BruteCCResult empty = brute_cc(Election(4, 2, {{}, {}}));
  CHECK(empty.coverage == 0);
  CHECK(empty.committee.members == std::vector<Candidate>{1, 2});

  const BruteCCResult full = brute_cc(Election(3, 3, {{1}, {}, {2, 3}}));
  CHECK(full.coverage == 2);

  CHECK_THROWS_AS(brute_cc(Election(40, 20, {{1}}), 1000), PreconditionError);
}

TEST_CASE("single-peaked CC") {
  const Election e = fixtures::example1();
  const auto axis = find_axis(e, AxisKind::sp);
  REQUIRE(axis.has_value());
  const IntervalInstance inst = to_intervals(e, *axis);
  const CoverageResult r = solve_spcc(inst);
  CHECK(r.coverage == 6);
  CHECK(cc_coverage(e, witness_candidates(inst, *axis, r)) == 6);

  const Election all = fixtures::figure6(4);
  CHECK(solve_spcc(to_intervals(all, *find_axis(all, AxisKind::sp))).coverage == 4);

  const Election some_empty(3, 3, {{1}, {}, {2, 3}, {}});
  CHECK(solve_spcc(to_intervals(some_empty, *find_axis(some_empty, AxisKind::sp))).coverage == 2);
}

TEST_CASE("single-crossing CC") {
  const Election e = fixtures::figure6(2);
  const auto axis = find_axis(e, AxisKind::sc);
  REQUIRE(axis.has_value());
  const IntervalInstance inst = to_intervals(e, *axis);
  const CoverageResult r = solve_sccc(inst);
  CHECK(r.coverage == 4);
  CHECK(static_cast<int>(r.chosen.size()) == 2);
  CHECK(interval_coverage(inst, r.chosen) == 4);

  const Election some_empty(3, 3, {{1}, {}, {1, 2}, {}});
  CHECK(solve_sccc(to_intervals(some_empty, *find_axis(some_empty, AxisKind::sc))).coverage == 2);
}

TEST_CASE("restricted solvers match brute force") {
  Rng rng(83);
  for (int i = 0; i < 500; ++i) {
    for (AxisKind kind : {AxisKind::sp, AxisKind::sc}) {
      const Election e = kind == AxisKind::sp ? random_sp_election(rng, 7, 7) : random_sc_election(rng, 7, 7);
      const auto axis = find_axis(e, kind);
      REQUIRE(axis.has_value());
      const IntervalInstance inst = to_intervals(e, *axis);
      const CoverageResult r = kind == AxisKind::sp ? solve_spcc(inst) : solve_sccc(inst);
      const auto witness = witness_candidates(inst, *axis, r);
      CHECK(r.coverage == brute_cc(e).coverage);
      CHECK(static_cast<int>(witness.size()) == e.committee_size());
      CHECK(cc_coverage(e, witness) == r.coverage);
    }
  }
}

TEST_CASE("restricted solvers give identical results for any worker count") {
  Rng rng(89);
  for (int i = 0; i < 6; ++i) {
    for (AxisKind kind : {AxisKind::sp, AxisKind::sc}) {
      const Election e = kind == AxisKind::sp ? sp_election_of_size(rng, 300, 300, 8) : sc_election_of_size(rng, 300, 300, 8);
      const IntervalInstance inst = to_intervals(e, *find_axis(e, kind));
      const auto solve = [&](int w) { return kind == AxisKind::sp ? solve_spcc(inst, w) : solve_sccc(inst, w); };
      const CoverageResult one = solve(1);
      CHECK(solve(8) == one);
      CHECK(solve(3) == one);
    }
  }
}

TEST_CASE("OptL transducer on the two-candidate instance") {
  IntervalInstance inst{AxisKind::sp, 2, {Interval{1, 2}}, {1}, 1};
  const OptLResult r = optl_enumerate(inst, OptLVariant::spcc);
  // optv guesses 0..1 times nextc 1..2: four paths, and both nextc values hit
  // the interval, so the two optv = 1 paths accept. nextc = 2 emits the longer
  // numeral 1^6 0 11 0.
  CHECK(r.total_paths == 4);
  CHECK(r.accepting_paths == 2);
  CHECK(r.max_output == from_bits("1111110110"));
  CHECK(r.optv == 1);
  CHECK(r.chosen == std::vector<int>{2});
  CHECK(r.ordering_holds);

  const auto path = optl_run_path(inst, OptLVariant::spcc, 1, {1});
  REQUIRE(path.has_value());
  CHECK(path->accepted);
  CHECK(path->output_value == from_bits("111111010"));
  CHECK(!optl_run_path(inst, OptLVariant::spcc, 0, {1})->accepted);
  CHECK(!optl_run_path(inst, OptLVariant::spcc, 1, {3}).has_value());

  const DecodedOutput d = optl_decode(from_bits("111111010"), 2, 1);
  CHECK(d.optv == 1);
  CHECK(d.chosen == std::vector<int>{1});
}

TEST_CASE("OptL with nothing to cover decodes optv 0") {
  IntervalInstance inst{AxisKind::sp, 3, {std::nullopt, std::nullopt}, {1, 2}, 2};
  const OptLResult r = optl_enumerate(inst, OptLVariant::spcc);
  CHECK(r.optv == 0);
  CHECK(r.chosen == std::vector<int>{2, 3});
  CHECK_THROWS_AS(optl_enumerate(IntervalInstance{AxisKind::sp, 3, {}, {}, 0}, OptLVariant::spcc), PreconditionError);
  CHECK_THROWS_AS(optl_enumerate(inst, OptLVariant::sccc), PreconditionError);
}

TEST_CASE("OptL optimum equals the solver optimum and outputs are ordered by optv") {
  Rng rng(97);
  for (int i = 0; i < 200; ++i) {
    const AxisKind kind = i % 2 == 0 ? AxisKind::sp : AxisKind::sc;
    const Election e = kind == AxisKind::sp ? random_sp_election(rng, 5, 5) : random_sc_election(rng, 5, 5);
    const IntervalInstance inst = to_intervals(e, *find_axis(e, kind));
    const OptLVariant variant = kind == AxisKind::sp ? OptLVariant::spcc : OptLVariant::sccc;
    const OptLResult r = optl_enumerate(inst, variant);
    const CoverageResult solved = kind == AxisKind::sp ? solve_spcc(inst) : solve_sccc(inst);
    CHECK(r.optv == solved.coverage);
    CHECK(r.ordering_holds);
    CHECK(interval_coverage(inst, r.chosen) == r.optv);
    CHECK(optl_enumerate(inst, variant, 4).max_output == r.max_output);
  }
}
