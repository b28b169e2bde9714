#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abc/election.hpp"
#include "abc/graph.hpp"
#include "abc/rational.hpp"
#include "abc/rules.hpp"

namespace abc {

enum class EquivalenceSense {
  member_iff_yes,  // distinguished elected <=> the source instance is a yes-instance
  member_iff_no,   // distinguished elected <=> the source instance is a no-instance
};

/// An election built from a graph instance plus what is needed to read the
/// answer back off the committee.
struct ReductionOutput {
  Election election;
  Candidate distinguished;
  std::string expected_rule;  // CLI rule identifier
  EquivalenceSense sense;
  /// Vertex u of the source graph is candidate u + candidate_offset.
  int candidate_offset = 0;
  /// Weight table for the Thiele constructions.
  std::optional<ThieleWeight> weights;
  /// Starting MES budget k/n where the construction pins it.
  std::optional<Rational> initial_budget;
};

/// One candidate per vertex, one {a, b} ballot per edge, committee |V| - k.
/// Rejects k outside [0, |V|) (k = |V| would ask for an empty committee).
ReductionOutput reduce_ovr_to_seqcc(const Graph& g, Vertex v, int k);

/// m copies of every ballot plus m - i singleton ballots for candidate i.
Election detie_seqcc(const Election& e);

/// ceil(4 / (1 - eps)) for eps in [0, 1).
long thiele_copies(const Rational& eps);

ReductionOutput reduce_lfmis_to_seq_thiele(const Graph& g, Vertex v, const Rational& eps);
ReductionOutput reduce_lfmis_to_revseq_thiele(const Graph& g, Vertex v, const Rational& eps);
ReductionOutput reduce_lfmis_to_seq_phragmen(const Graph& g, Vertex v);
ReductionOutput reduce_lfmis_to_greedy_monroe(const Graph& g, Vertex v);
ReductionOutput reduce_lfmis_to_mes(const Graph& g, Vertex v);
/// Adds a padding candidate in front (index 1); original vertex u becomes u + 1.
ReductionOutput reduce_lfmis_to_mes_notie(const Graph& g, Vertex v);
/// Adds m copies of a 13-vertex tree (root, four children, eight leaves).
ReductionOutput reduce_lfmis_to_mes_seqp(const Graph& g, Vertex v);

/// Index layout of the tree gadgets in reduce_lfmis_to_mes_seqp.
struct TreeGadget {
  Candidate root;
  std::vector<Candidate> middle;  // four children of the root
  std::vector<Candidate> leaves;  // eight leaves, two per middle vertex
};
std::vector<TreeGadget> mes_seqp_trees(int num_vertices);

struct RuleOutcome {
  Committee committee;
  std::vector<RoundTrace> trace;
  int tie_events = 0;
};

/// Runs the construction's expected rule on its election.
RuleOutcome run_expected_rule(const ReductionOutput& r);

/// Does the committee answer the source question with "yes"?
bool reads_yes(const ReductionOutput& r, const Committee& committee, Vertex v);

/// Construction names accepted by make_reduction: thiele, rev-thiele,
/// phragmen, monroe, mes, mes-notie, mes-seqp.
ReductionOutput make_lfmis_reduction(const std::string& name, const Graph& g, Vertex v, const Rational& eps = Rational(0));

std::string sidecar_line(const ReductionOutput& r);

}  // namespace abc
