// abckit: compute ABC rules, build hardness reductions, detect restricted
// domains and run the verification harness.
//
// Exit codes: 0 success, 1 verification disagreement, 2 parse error,
// 3 precondition failure.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abc/axis.hpp"
#include "abc/cc_solvers.hpp"
#include "abc/election.hpp"
#include "abc/generators.hpp"
#include "abc/graph.hpp"
#include "abc/optl.hpp"
#include "abc/reductions.hpp"
#include "abc/rules.hpp"
#include "abc/verify.hpp"

namespace {

using namespace abc;

constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

// Reads a whole file, or standard input for "-".
std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Election load_election(const std::string& path) { return parse_election_text(slurp(path)); }
Graph load_graph(const std::string& path) { return parse_graph_text(slurp(path)); }

// One p/q per non-blank line.
ThieleWeight load_weights(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<Rational> gains;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      gains.push_back(Rational::parse(line.substr(line.find_first_not_of(" \t"))));
    } catch (const std::invalid_argument& err) {
      throw ParseError(number, err.what());
    }
  }
  return ThieleWeight(std::move(gains));
}

Rational parse_rational_option(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& err) {
    throw ParseError(0, err.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(0, "malformed integer list '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError(0, "empty integer list");
  return out;
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string rule;
  std::string input = "-";
  std::string weights;
  bool trace = false;
};

int cmd_compute(const ComputeArgs& a) {
  const Election e = load_election(a.input);
  std::optional<ThieleWeight> w;
  if (!a.weights.empty()) w = load_weights(a.weights);
  const RuleRun run = run_rule(a.rule, e, w);
  std::cout << run.committee.to_string() << "\n";
  if (a.trace) {
    for (const auto& t : run.trace) std::cerr << format_trace_line(t) << "\n";
  }
  if (run.short_committee) {
    std::cerr << "warning: committee has " << run.committee.size() << " of " << e.committee_size() << " seats filled\n";
  }
  return 0;
}

struct ReduceArgs {
  std::string name;
  std::string graph;
  std::string input;
  int vertex = 0;
  int k = -1;
  std::string epsilon = "0";
};

int cmd_reduce(const ReduceArgs& a) {
  if (a.name == "detie") {
    if (a.input.empty()) throw PreconditionError("detie needs --input <election>");
    write_election(std::cout, detie_seqcc(load_election(a.input)));
    return 0;
  }
  if (a.graph.empty()) throw PreconditionError("reduction '" + a.name + "' needs --graph");
  const Graph g = load_graph(a.graph);
  std::optional<ReductionOutput> out;
  if (a.name == "ovr-seqcc") {
    if (a.k < 0) throw PreconditionError("ovr-seqcc needs --k");
    out = reduce_ovr_to_seqcc(g, a.vertex, a.k);
  } else {
    out = make_lfmis_reduction(a.name, g, a.vertex, parse_rational_option(a.epsilon));
  }
  write_election(std::cout, out->election);
  std::cout << sidecar_line(*out) << "\n";
  return 0;
}

int cmd_axis(const std::string& kind_text, const std::string& input) {
  const AxisKind kind = kind_text == "sp" ? AxisKind::sp : AxisKind::sc;
  const auto axis = find_axis(load_election(input), kind);
  if (axis) {
    std::cout << format_axis(*axis) << "\n";
  } else {
    std::cout << (kind == AxisKind::sp ? "not-single-peaked" : "not-single-crossing") << "\n";
  }
  return 0;
}

struct OracleArgs {
  std::string which;
  std::string graph;
  std::string input;
  int vertex = 0;
  int k = -1;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_oracle(const OracleArgs& a) {
  if (a.which == "cc") {
    if (a.input.empty()) throw PreconditionError("oracle cc needs --input");
    const BruteCCResult r = brute_cc(load_election(a.input));
    std::cout << "coverage=" << r.coverage << "\ncommittee=" << r.committee.to_string() << "\n";
    return 0;
  }
  if (a.graph.empty()) throw PreconditionError("oracle " + a.which + " needs --graph");
  const Graph g = load_graph(a.graph);
  if (a.which == "ovr") {
    if (a.vertex == 0) {
      std::cout << format_members(ovr_deletion_order(g)) << "\n";
      return 0;
    }
    if (a.k < 0) throw PreconditionError("oracle ovr with --vertex needs --k");
    std::cout << yes_no(ovr_decide(g, a.vertex, a.k)) << "\n";
    return 0;
  }
  const auto set = lfmis(g);
  if (a.vertex == 0) {
    std::cout << format_members(set) << "\n";
  } else {
    if (!g.has_vertex(a.vertex)) throw PreconditionError("vertex " + std::to_string(a.vertex) + " not in graph");
    std::cout << yes_no(std::binary_search(set.begin(), set.end(), a.vertex)) << "\n";
  }
  return 0;
}

int cmd_restricted(const std::string& which, const std::string& input, bool use_optl, int threads) {
  const Election e = load_election(input);
  const AxisKind kind = which == "sp-cc" ? AxisKind::sp : AxisKind::sc;
  const auto axis = find_axis(e, kind);
  if (!axis) {
    throw PreconditionError(kind == AxisKind::sp ? "election is not single-peaked" : "election is not single-crossing");
  }
  const IntervalInstance inst = to_intervals(e, *axis);
  if (use_optl) {
    const OptLVariant variant = kind == AxisKind::sp ? OptLVariant::spcc : OptLVariant::sccc;
    const OptLResult r = optl_enumerate(inst, variant, threads);
    const CoverageResult as_witness{r.optv, r.chosen};
    std::cout << "optv=" << r.optv << "\ncommittee=" << format_members(witness_candidates(inst, *axis, as_witness))
              << "\naccepting_paths=" << r.accepting_paths << "\n";
    std::cerr << "total_paths=" << r.total_paths << " ordering_lemma=" << (r.ordering_holds ? "holds" : "violated")
              << "\n";
    return 0;
  }
  const CoverageResult r = kind == AxisKind::sp ? solve_spcc(inst, threads) : solve_sccc(inst, threads);
  std::cout << "coverage=" << r.coverage << "\ncommittee=" << format_members(witness_candidates(inst, *axis, r))
            << "\n";
  return 0;
}

struct VerifyArgs {
  std::string theorem;
  VerifyOptions options;
};

int cmd_verify(const VerifyArgs& a) {
  std::cerr << "seed=" << a.options.seed << "\n";
  const VerifyReport report = verify_theorem(a.theorem, a.options);
  std::cout << format_report(report);
  return report.passed() ? 0 : kExitDisagreement;
}

struct BenchArgs {
  std::string suite;
  std::string sizes = "200,400";
  std::string threads = "1";
  int k = 10;
  std::uint64_t seed = 1;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const BenchArgs& a) {
  const auto sizes = parse_int_list(a.sizes);
  const auto thread_counts = parse_int_list(a.threads);
  const bool restricted = a.suite == "sp-cc" || a.suite == "sc-cc";
  if (!restricted) {
    const auto& names = rule_names();
    if (std::find(names.begin(), names.end(), a.suite) == names.end() || a.suite == "seq-thiele" ||
        a.suite == "rev-seq-thiele") {
      throw PreconditionError("unknown bench suite '" + a.suite + "'");
    }
  }
  std::cout << "# seed=" << a.seed << "\n";
  std::cout << "suite\tsize\tthreads\tseconds\tresult\n";
  int status = 0;
  for (int size : sizes) {
    if (size < 1) throw PreconditionError("sizes must be positive");
    Rng rng(a.seed);
    if (!restricted) {
      // Sequential rules are single-threaded: `size` voters over 20 candidates.
      const int m = 20;
      const Election e = election_of_size(rng, m, size, std::min(a.k, m));
      const auto start = std::chrono::steady_clock::now();
      const RuleRun run = run_rule(a.suite, e);
      std::cout << a.suite << "\t" << size << "\t1\t" << seconds_since(start) << "\t" << run.committee.to_string()
                << "\n";
      continue;
    }
    const AxisKind kind = a.suite == "sp-cc" ? AxisKind::sp : AxisKind::sc;
    const int k = std::min(a.k, size);
    const Election e = kind == AxisKind::sp ? sp_election_of_size(rng, size, size, k)
                                            : sc_election_of_size(rng, size, size, k);
    const auto axis = find_axis(e, kind);
    if (!axis) throw std::logic_error("generated election lost its axis");
    const IntervalInstance inst = to_intervals(e, *axis);
    std::optional<CoverageResult> reference;
    for (int threads : thread_counts) {
      const auto start = std::chrono::steady_clock::now();
      const CoverageResult r = kind == AxisKind::sp ? solve_spcc(inst, threads) : solve_sccc(inst, threads);
      std::cout << a.suite << "\t" << size << "\t" << threads << "\t" << seconds_since(start) << "\tcoverage="
                << r.coverage << "\n";
      if (!reference) {
        reference = r;
      } else if (!(*reference == r)) {
        std::cerr << "error: " << a.suite << " size " << size << " differs at " << threads << " threads\n";
        status = kExitDisagreement;
      }
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approval-based committee rules: compute, reduce, detect domains, verify"};
  app.require_subcommand(1);
  int status = 0;

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Run an ABC rule on an election");
  c->add_option("rule", compute.rule, "Rule identifier")->required()->check(CLI::IsMember(rule_names()));
  c->add_option("--input", compute.input, "Election file or - for stdin");
  c->add_option("--weights", compute.weights, "Marginal weight file, one p/q per line");
  c->add_flag("--trace", compute.trace, "Print round trace to stderr");
  c->callback([&] { status = cmd_compute(compute); });

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Build a reduction election from a graph");
  r->add_option("name", reduce.name, "Reduction")
      ->required()
      ->check(CLI::IsMember({"ovr-seqcc", "detie", "thiele", "rev-thiele", "phragmen", "monroe", "mes", "mes-notie",
                             "mes-seqp"}));
  r->add_option("--graph", reduce.graph, "Graph file or -");
  r->add_option("--input", reduce.input, "Election file (detie only)");
  r->add_option("--vertex", reduce.vertex, "Distinguished vertex");
  r->add_option("--k", reduce.k, "OVR position bound");
  r->add_option("--epsilon", reduce.epsilon, "Thiele epsilon as p/q");
  r->callback([&] { status = cmd_reduce(reduce); });

  std::string axis_kind;
  std::string axis_input = "-";
  auto* ax = app.add_subcommand("axis", "Find a single-peaked or single-crossing axis");
  ax->add_option("--kind", axis_kind, "sp or sc")->required()->check(CLI::IsMember({"sp", "sc"}));
  ax->add_option("--input", axis_input, "Election file or -");
  ax->callback([&] { status = cmd_axis(axis_kind, axis_input); });

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Reference answers for OVR, LFMIS and CC");
  o->add_option("which", oracle.which, "ovr, lfmis or cc")->required()->check(CLI::IsMember({"ovr", "lfmis", "cc"}));
  o->add_option("--graph", oracle.graph, "Graph file or -");
  o->add_option("--input", oracle.input, "Election file or - (cc)");
  o->add_option("--vertex", oracle.vertex, "Vertex to query");
  o->add_option("--k", oracle.k, "OVR position bound");
  o->callback([&] { status = cmd_oracle(oracle); });

  std::string restricted_which;
  std::string restricted_input = "-";
  bool restricted_optl = false;
  int restricted_threads = 1;
  auto* rs = app.add_subcommand("restricted", "Polynomial CC on single-peaked / single-crossing elections");
  rs->add_option("which", restricted_which, "sp-cc or sc-cc")->required()->check(CLI::IsMember({"sp-cc", "sc-cc"}));
  rs->add_option("--input", restricted_input, "Election file or -");
  rs->add_flag("--optl", restricted_optl, "Use the path-enumerating transducer");
  rs->add_option("--threads", restricted_threads, "Worker threads")->check(CLI::PositiveNumber);
  rs->callback([&] { status = cmd_restricted(restricted_which, restricted_input, restricted_optl, restricted_threads); });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a reduction or solver against its oracle");
  v->add_option("theorem", verify.theorem, "Theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  v->add_option("--trials", verify.options.trials, "Random instances")->check(CLI::NonNegativeNumber);
  v->add_option("--max-size", verify.options.max_size, "Size bound (0: theorem default)")->check(CLI::NonNegativeNumber);
  v->add_option("--seed", verify.options.seed, "Seed");
  v->add_option("--threads", verify.options.workers, "Worker threads")->check(CLI::PositiveNumber);
  v->callback([&] { status = cmd_verify(verify); });

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Wall-clock table for rules and restricted solvers");
  b->add_option("suite", bench.suite, "sp-cc, sc-cc or a sequential rule id")->required();
  b->add_option("--sizes", bench.sizes, "Comma-separated sizes");
  b->add_option("--threads", bench.threads, "Comma-separated worker counts");
  b->add_option("--k", bench.k, "Committee size")->check(CLI::PositiveNumber);
  b->add_option("--seed", bench.seed, "Seed");
  b->callback([&] { status = cmd_bench(bench); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitParse;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& err) {
    std::cerr << "precondition failed: " << err.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  }
  return status;
}
