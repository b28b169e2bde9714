#include "abc/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "abc/axis.hpp"
#include "abc/cc_solvers.hpp"
#include "abc/generators.hpp"
#include "abc/optl.hpp"
#include "abc/parallel.hpp"
#include "abc/reductions.hpp"

namespace abc {

namespace {

struct CaseResult {
  long agreements = 0;
  long tie_events = 0;
  std::vector<Disagreement> disagreements;
};

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string summarize(const Graph& g) {
  std::string s = "n=" + std::to_string(g.num_vertices()) + " edges=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return s + "]";
}

std::string summarize(const Election& e) {
  std::string s = "m=" + std::to_string(e.num_candidates()) + " k=" + std::to_string(e.committee_size()) + " ballots=[";
  for (std::size_t i = 0; i < e.ballots().size(); ++i) {
    if (i) s += '|';
    s += format_members(e.ballots()[i]);
  }
  return s + "]";
}

void record(CaseResult& r, bool expected, bool got, std::uint64_t seed, const std::string& instance, int vertex) {
  if (expected == got) {
    ++r.agreements;
  } else {
    r.disagreements.push_back({seed, instance, vertex, expected, got});
  }
}

VerifyReport aggregate(const std::string& id, int trials, bool tie_free, std::vector<CaseResult>& parts) {
  VerifyReport report;
  report.theorem_id = id;
  report.trials = trials;
  report.tie_free_claimed = tie_free;
  for (auto& p : parts) {
    report.agreements += p.agreements;
    report.tie_events += p.tie_events;
    for (auto& d : p.disagreements) report.disagreements.push_back(std::move(d));
  }
  return report;
}

// ---------------------------------------------------------------------------

CaseResult check_ovr_graph(const Graph& g, std::uint64_t seed) {
  CaseResult r;
  const int n = g.num_vertices();
  for (Vertex v = 1; v <= n; ++v) {
    for (int k = 0; k < n; ++k) {
      const ReductionOutput red = reduce_ovr_to_seqcc(g, v, k);
      const RuleOutcome outcome = run_expected_rule(red);
      r.tie_events += outcome.tie_events;
      record(r, ovr_decide(g, v, k), reads_yes(red, outcome.committee, v), seed, summarize(g) + " k=" + std::to_string(k), v);
    }
  }
  return r;
}

VerifyReport verify_thm2(const VerifyOptions& opt) {
  const int exhaustive = opt.max_size > 0 ? opt.max_size : 5;
  std::vector<Graph> graphs;
  std::vector<std::uint64_t> seeds;
  for (int n = 1; n <= exhaustive; ++n) {
    for (Graph& g : all_graphs(n)) {
      graphs.push_back(std::move(g));
      seeds.push_back(0);
    }
  }
  for (int i = 0; i < opt.trials; ++i) {
    const std::uint64_t s = case_seed(opt.seed, i);
    Rng rng(s);
    graphs.push_back(random_graph(rng, rng.between(1, 8)));
    seeds.push_back(s);
  }
  std::vector<CaseResult> parts(graphs.size());
  parallel_for(opt.workers, graphs.size(), [&](std::size_t i) { parts[i] = check_ovr_graph(graphs[i], seeds[i]); });
  return aggregate("thm2", static_cast<int>(graphs.size()), false, parts);
}

VerifyReport verify_thm3(const VerifyOptions& opt) {
  const int max_m = opt.max_size > 0 ? opt.max_size : 8;
  std::vector<CaseResult> parts(opt.trials);
  parallel_for(opt.workers, parts.size(), [&](std::size_t i) {
    const std::uint64_t s = case_seed(opt.seed, i);
    Rng rng(s);
    const Election e = random_election(rng, max_m, 12);
    const auto original = seq_thiele(e, ThieleWeight::cc(e.committee_size()));
    const auto padded = seq_thiele(detie_seqcc(e), ThieleWeight::cc(e.committee_size()));
    const int ties = count_tie_events(padded.trace);
    parts[i].tie_events = ties;
    record(parts[i], true, padded.order == original.order && ties == 0, s, summarize(e), -1);
  });
  return aggregate("thm3", opt.trials, true, parts);
}

// LFMIS reductions: one election per graph answers the question for every vertex.
VerifyReport verify_lfmis(const std::string& id, const std::string& construction, const std::vector<Rational>& epsilons,
                          int min_m, int default_max_m, bool tie_free, const VerifyOptions& opt) {
  const int max_m = std::max(min_m, opt.max_size > 0 ? opt.max_size : default_max_m);
  std::vector<int> sizes;
  for (int m = min_m; m <= max_m; m += 2) sizes.push_back(m);
  const std::size_t per_eps = static_cast<std::size_t>(opt.trials);
  std::vector<CaseResult> parts(per_eps * epsilons.size());
  parallel_for(opt.workers, parts.size(), [&](std::size_t idx) {
    const std::size_t trial = idx % per_eps;
    const Rational& eps = epsilons[idx / per_eps];
    const std::uint64_t s = case_seed(opt.seed, trial);
    Rng rng(s);
    const Graph g = random_cubic_graph(rng, sizes[trial % sizes.size()]);
    const ReductionOutput red = make_lfmis_reduction(construction, g, 1, eps);
    const RuleOutcome outcome = run_expected_rule(red);
    const auto independent = lfmis(g);
    CaseResult& r = parts[idx];
    r.tie_events = outcome.tie_events;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      const bool in_set = std::binary_search(independent.begin(), independent.end(), v);
      record(r, in_set, reads_yes(red, outcome.committee, v), s, summarize(g) + " eps=" + eps.to_string(), v);
    }
  });
  return aggregate(id, static_cast<int>(parts.size()), tie_free, parts);
}

VerifyReport verify_restricted(const std::string& id, AxisKind kind, const VerifyOptions& opt) {
  const int max_size = opt.max_size > 0 ? opt.max_size : 7;
  std::vector<CaseResult> parts(opt.trials);
  parallel_for(opt.workers, parts.size(), [&](std::size_t i) {
    const std::uint64_t s = case_seed(opt.seed, i);
    Rng rng(s);
    const Election e = kind == AxisKind::sp ? random_sp_election(rng, max_size, max_size)
                                            : random_sc_election(rng, max_size, max_size);
    const auto axis = find_axis(e, kind);
    if (!axis) {
      record(parts[i], true, false, s, summarize(e) + " (no axis found)", -1);
      return;
    }
    const IntervalInstance inst = to_intervals(e, *axis);
    const CoverageResult solved = kind == AxisKind::sp ? solve_spcc(inst) : solve_sccc(inst);
    const BruteCCResult oracle = brute_cc(e);
    const auto witness = witness_candidates(inst, *axis, solved);
    const bool ok = solved.coverage == oracle.coverage && cc_coverage(e, witness) == solved.coverage &&
                    static_cast<int>(witness.size()) == e.committee_size();
    record(parts[i], true, ok, s, summarize(e), -1);
  });
  return aggregate(id, opt.trials, false, parts);
}

VerifyReport verify_optl(const VerifyOptions& opt) {
  const int max_size = opt.max_size > 0 ? opt.max_size : 5;
  std::vector<CaseResult> parts(opt.trials);
  parallel_for(opt.workers, parts.size(), [&](std::size_t i) {
    const std::uint64_t s = case_seed(opt.seed, i);
    Rng rng(s);
    const AxisKind kind = i % 2 == 0 ? AxisKind::sp : AxisKind::sc;
    const Election e = kind == AxisKind::sp ? random_sp_election(rng, max_size, max_size)
                                            : random_sc_election(rng, max_size, max_size);
    const auto axis = find_axis(e, kind);
    if (!axis) {
      record(parts[i], true, false, s, summarize(e) + " (no axis found)", -1);
      return;
    }
    const IntervalInstance inst = to_intervals(e, *axis);
    const OptLVariant variant = kind == AxisKind::sp ? OptLVariant::spcc : OptLVariant::sccc;
    const OptLResult enumerated = optl_enumerate(inst, variant);
    const CoverageResult solved = kind == AxisKind::sp ? solve_spcc(inst) : solve_sccc(inst);
    const auto replay = optl_run_path(inst, variant, enumerated.optv, enumerated.chosen);
    const bool ok = enumerated.ordering_holds && enumerated.optv == solved.coverage && replay && replay->accepted &&
                    replay->output_value == enumerated.max_output;
    record(parts[i], true, ok, s, summarize(e) + (kind == AxisKind::sp ? " sp" : " sc"), -1);
  });
  return aggregate("optl", opt.trials, false, parts);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"thm2", "thm3",      "thiele",   "rev-thiele", "phragmen", "monroe",
                                               "mes",  "mes-notie", "mes-seqp", "spcc",       "sccc",     "optl"};
  return ids;
}

VerifyReport verify_theorem(const std::string& id, const VerifyOptions& opt) {
  if (id == "thm2") return verify_thm2(opt);
  if (id == "thm3") return verify_thm3(opt);
  if (id == "thiele") return verify_lfmis(id, "thiele", {Rational(0), Rational(1, 2), Rational(3, 4)}, 4, 12, true, opt);
  if (id == "rev-thiele") return verify_lfmis(id, "rev-thiele", {Rational(0), Rational(1, 2)}, 4, 12, true, opt);
  if (id == "phragmen") return verify_lfmis(id, "phragmen", {Rational(0)}, 4, 12, true, opt);
  if (id == "monroe") return verify_lfmis(id, "monroe", {Rational(0)}, 4, 12, true, opt);
  if (id == "mes") return verify_lfmis(id, "mes", {Rational(0)}, 4, 12, false, opt);
  if (id == "mes-notie") return verify_lfmis(id, "mes-notie", {Rational(0)}, 12, 14, true, opt);
  if (id == "mes-seqp") return verify_lfmis(id, "mes-seqp", {Rational(0)}, 4, 12, false, opt);
  if (id == "spcc") return verify_restricted(id, AxisKind::sp, opt);
  if (id == "sccc") return verify_restricted(id, AxisKind::sc, opt);
  if (id == "optl") return verify_optl(opt);
  throw PreconditionError("unknown theorem '" + id + "'");
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream out;
  out << "theorem=" << r.theorem_id << " trials=" << r.trials << " cases=" << r.cases()
      << " agreements=" << r.agreements << " disagreements=" << r.disagreements.size()
      << " tie_events=" << r.tie_events << (r.tie_free_claimed ? " (tie-free claimed)" : "") << "\n";
  for (const auto& d : r.disagreements) {
    out << "  seed=" << d.seed << " vertex=" << d.vertex << " expected=" << (d.expected ? "yes" : "no")
        << " got=" << (d.got ? "yes" : "no") << " " << d.instance << "\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace abc
