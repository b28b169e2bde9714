#include "abc/reductions.hpp"

#include <stdexcept>

namespace abc {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction self-check failed: " + what);
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
}

void require_cubic(const Graph& g) {
  if (!g.is_regular(3)) throw PreconditionError("construction needs a 3-regular graph");
}

void require_epsilon(const Rational& eps) {
  if (eps.sign() < 0 || eps >= Rational(1)) throw PreconditionError("epsilon must lie in [0, 1)");
}

// Ballots in canonical order: repeated edge ballots sorted by edge, then
// singleton ballots by candidate.
class BallotBuilder {
 public:
  void edges(const Graph& g, long copies, int offset = 0) {
    for (const auto& [a, b] : g.edges()) repeat({a + offset, b + offset}, copies);
  }
  void repeat(const Ballot& b, long copies) {
    for (long i = 0; i < copies; ++i) ballots_.push_back(b);
  }
  void singletons(Candidate c, long copies) { repeat({c}, copies); }
  std::vector<Ballot> take() { return std::move(ballots_); }

 private:
  std::vector<Ballot> ballots_;
};

void check_support(const Election& e, Candidate c, long expected, const std::string& label) {
  ensure(static_cast<long>(e.approvers(c).size()) == expected,
         label + ": candidate " + std::to_string(c) + " has " + std::to_string(e.approvers(c).size()) +
             " approvers, expected " + std::to_string(expected));
}

}  // namespace

ReductionOutput reduce_ovr_to_seqcc(const Graph& g, Vertex v, int k) {
  require_vertex(g, v);
  const int n = g.num_vertices();
  if (k < 0 || k > n) throw PreconditionError("k must lie in [0, |V|]");
  if (k == n) throw PreconditionError("k = |V| gives an empty committee");
  BallotBuilder builder;
  builder.edges(g, 1);
  Election e(n, n - k, builder.take());
  ensure(e.num_voters() == g.num_edges(), "one ballot per edge");
  for (Vertex u = 1; u <= n; ++u) check_support(e, u, g.degree(u), "ovr");
  return {std::move(e), v, "seq-cc", EquivalenceSense::member_iff_yes, 0, std::nullopt, std::nullopt};
}

Election detie_seqcc(const Election& e) {
  const long m = e.num_candidates();
  BallotBuilder builder;
  for (const Ballot& b : e.ballots()) builder.repeat(b, m);
  for (Candidate c = 1; c <= m; ++c) builder.singletons(c, m - c);
  Election out(e.num_candidates(), e.committee_size(), builder.take());
  ensure(out.num_voters() == m * e.num_voters() + m * (m - 1) / 2, "padded ballot count");
  return out;
}

long thiele_copies(const Rational& eps) {
  require_epsilon(eps);
  return (Rational(4) / (Rational(1) - eps)).ceil().get_si();
}

ReductionOutput reduce_lfmis_to_seq_thiele(const Graph& g, Vertex v, const Rational& eps) {
  require_vertex(g, v);
  require_cubic(g);
  const long p = thiele_copies(eps);
  const long m = g.num_vertices();
  BallotBuilder builder;
  builder.edges(g, p * m);
  for (Candidate a = 1; a <= m; ++a) builder.singletons(a, m - a);
  for (long j = 1; j <= m; ++j) builder.singletons(static_cast<Candidate>(m + j), 3 * p * m - j);
  Election e(static_cast<int>(2 * m), static_cast<int>(m), builder.take());
  for (Candidate a = 1; a <= m; ++a) check_support(e, a, 3 * p * m + (m - a), "thiele");
  for (long j = 1; j <= m; ++j) check_support(e, static_cast<Candidate>(m + j), 3 * p * m - j, "thiele");
  return {std::move(e), v, "seq-thiele", EquivalenceSense::member_iff_yes, 0,
          ThieleWeight::from_epsilon(eps, static_cast<int>(2 * m)), std::nullopt};
}

ReductionOutput reduce_lfmis_to_revseq_thiele(const Graph& g, Vertex v, const Rational& eps) {
  require_vertex(g, v);
  require_cubic(g);
  const long p = thiele_copies(eps);
  const long m = g.num_vertices();
  BallotBuilder builder;
  builder.edges(g, p * m);
  for (long pair = 0; pair < m; ++pair) {
    const auto first = static_cast<Candidate>(m + 1 + 2 * pair);
    builder.repeat({first, first + 1}, 3 * p * m);
  }
  for (Candidate a = 1; a <= 3 * m; ++a) builder.singletons(a, a);
  Election e(static_cast<int>(3 * m), static_cast<int>(2 * m), builder.take());
  for (Candidate a = 1; a <= 3 * m; ++a) check_support(e, a, 3 * p * m + a, "rev-thiele");
  return {std::move(e), v, "rev-seq-thiele", EquivalenceSense::member_iff_no, 0,
          ThieleWeight::from_epsilon(eps, static_cast<int>(3 * m)), std::nullopt};
}

ReductionOutput reduce_lfmis_to_seq_phragmen(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_cubic(g);
  const long m = g.num_vertices();
  if (m < 3) throw PreconditionError("seq-Phragmén construction needs at least 3 vertices");
  BallotBuilder builder;
  builder.edges(g, m * m);
  for (Candidate a = 1; a <= m; ++a) builder.singletons(a, m - a);
  for (long j = 1; j <= m; ++j) builder.singletons(static_cast<Candidate>(m + j), 3 * m * m - j);
  Election e(static_cast<int>(2 * m), static_cast<int>(m), builder.take());
  for (Candidate a = 1; a <= m; ++a) check_support(e, a, 3 * m * m + (m - a), "phragmen");
  for (long j = 1; j <= m; ++j) check_support(e, static_cast<Candidate>(m + j), 3 * m * m - j, "phragmen");
  return {std::move(e), v, "seq-phragmen", EquivalenceSense::member_iff_yes, 0, std::nullopt, std::nullopt};
}

ReductionOutput reduce_lfmis_to_greedy_monroe(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_cubic(g);
  const long m = g.num_vertices();
  BallotBuilder builder;
  builder.edges(g, 2 * m);
  for (Candidate a = 1; a <= m; ++a) builder.singletons(a, m - a);
  for (long j = 1; j <= m; ++j) builder.singletons(static_cast<Candidate>(m + j), 5 * m + j);
  Election e(static_cast<int>(2 * m), static_cast<int>(m), builder.take());
  for (Candidate a = 1; a <= m; ++a) check_support(e, a, 6 * m + (m - a), "monroe");
  ensure(e.num_voters() == 9 * m * m, "n = 9m^2 so that n/k = 9m");
  for (int q : monroe_quota_schedule(e.num_voters(), e.committee_size())) ensure(q == 9 * m, "quota 9m");
  return {std::move(e), v, "greedy-monroe", EquivalenceSense::member_iff_yes, 0, std::nullopt, std::nullopt};
}

ReductionOutput reduce_lfmis_to_mes(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_cubic(g);
  const long m = g.num_vertices();
  BallotBuilder builder;
  builder.edges(g, 1);
  for (long j = 1; j <= m; ++j) builder.singletons(static_cast<Candidate>(m + j), 3);
  Election e(static_cast<int>(2 * m), static_cast<int>(m / 2 + m), builder.take());
  ensure(e.num_voters() == 3 * m / 2 + 3 * m, "n = 3m/2 + 3m");
  const Rational budget(e.committee_size(), e.num_voters());
  ensure(budget == Rational(1, 3), "initial budget 1/3");
  for (Candidate c = 1; c <= 2 * m; ++c) check_support(e, c, 3, "mes");
  return {std::move(e), v, "mes", EquivalenceSense::member_iff_yes, 0, std::nullopt, budget};
}

ReductionOutput reduce_lfmis_to_mes_notie(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_cubic(g);
  const long m = g.num_vertices();
  if (m < 12) throw PreconditionError("tie-free MES construction needs at least 12 vertices");
  BallotBuilder builder;
  builder.edges(g, m * m, 1);
  builder.singletons(1, m * m * m);
  for (Candidate a = 1; a <= m; ++a) builder.singletons(a + 1, m - a);
  Election e(static_cast<int>(m + 1), static_cast<int>(m + 1), builder.take());
  ensure(2 * e.num_voters() == 3 * m * m * m + m * (m - 1) + 2 * m * m * m, "n = 3m^3/2 + m(m-1)/2 + m^3");
  const Rational budget(e.committee_size(), e.num_voters());
  ensure(budget == Rational(mpz_class(2 * (m + 1)), mpz_class(3 * m * m * m + m * (m - 1) + 2 * m * m * m)),
         "initial budget (m+1)/(3m^3/2 + m(m-1)/2 + m^3)");
  check_support(e, 1, m * m * m, "mes-notie");
  for (Candidate a = 1; a <= m; ++a) check_support(e, a + 1, 3 * m * m + (m - a), "mes-notie");
  return {std::move(e), v + 1, "mes", EquivalenceSense::member_iff_yes, 1, std::nullopt, budget};
}

std::vector<TreeGadget> mes_seqp_trees(int num_vertices) {
  std::vector<TreeGadget> trees;
  for (int t = 0; t < num_vertices; ++t) {
    const Candidate base = num_vertices + 13 * t;
    TreeGadget tree{base + 1, {}, {}};
    for (int i = 0; i < 4; ++i) tree.middle.push_back(base + 2 + i);
    for (int i = 0; i < 8; ++i) tree.leaves.push_back(base + 6 + i);
    trees.push_back(std::move(tree));
  }
  return trees;
}

ReductionOutput reduce_lfmis_to_mes_seqp(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_cubic(g);
  const long m = g.num_vertices();
  BallotBuilder builder;
  builder.edges(g, 1);
  for (const TreeGadget& tree : mes_seqp_trees(static_cast<int>(m))) {
    for (int i = 0; i < 4; ++i) {
      builder.repeat({tree.root, tree.middle[i]}, 1);
      builder.repeat({tree.middle[i], tree.leaves[2 * i]}, 1);
      builder.repeat({tree.middle[i], tree.leaves[2 * i + 1]}, 1);
    }
  }
  Election e(static_cast<int>(14 * m), static_cast<int>(m / 2 + 4 * m), builder.take());
  ensure(e.num_voters() == 3 * m / 2 + 12 * m, "n = 3m/2 + 12m");
  const Rational budget(e.committee_size(), e.num_voters());
  ensure(budget == Rational(1, 3), "initial budget 1/3");
  for (const TreeGadget& tree : mes_seqp_trees(static_cast<int>(m))) {
    check_support(e, tree.root, 4, "mes-seqp root");
    for (Candidate c : tree.middle) check_support(e, c, 3, "mes-seqp middle");
    for (Candidate c : tree.leaves) check_support(e, c, 1, "mes-seqp leaf");
  }
  return {std::move(e), v, "mes-phragmen", EquivalenceSense::member_iff_yes, 0, std::nullopt, budget};
}

RuleOutcome run_expected_rule(const ReductionOutput& r) {
  RuleRun run = run_rule(r.expected_rule, r.election, r.weights);
  RuleOutcome out{std::move(run.committee), std::move(run.trace), 0};
  out.tie_events = count_tie_events(out.trace);
  return out;
}

bool reads_yes(const ReductionOutput& r, const Committee& committee, Vertex v) {
  const bool member = committee.contains(v + r.candidate_offset);
  return r.sense == EquivalenceSense::member_iff_yes ? member : !member;
}

ReductionOutput make_lfmis_reduction(const std::string& name, const Graph& g, Vertex v, const Rational& eps) {
  if (name == "thiele") return reduce_lfmis_to_seq_thiele(g, v, eps);
  if (name == "rev-thiele") return reduce_lfmis_to_revseq_thiele(g, v, eps);
  if (name == "phragmen") return reduce_lfmis_to_seq_phragmen(g, v);
  if (name == "monroe") return reduce_lfmis_to_greedy_monroe(g, v);
  if (name == "mes") return reduce_lfmis_to_mes(g, v);
  if (name == "mes-notie") return reduce_lfmis_to_mes_notie(g, v);
  if (name == "mes-seqp") return reduce_lfmis_to_mes_seqp(g, v);
  throw PreconditionError("unknown reduction '" + name + "'");
}

std::string sidecar_line(const ReductionOutput& r) {
  return "distinguished=" + std::to_string(r.distinguished) + " rule=" + r.expected_rule +
         " sense=" + (r.sense == EquivalenceSense::member_iff_yes ? "yes" : "no");
}

}  // namespace abc
