#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abc {

struct Disagreement {
  std::uint64_t seed;
  std::string instance;  // graph or election summary
  int vertex;            // -1 when the case is not about a vertex
  bool expected;
  bool got;
};

struct VerifyReport {
  std::string theorem_id;
  int trials = 0;                 // generated instances (graphs or elections)
  long agreements = 0;
  std::vector<Disagreement> disagreements;
  long tie_events = 0;
  bool tie_free_claimed = false;  // the construction promises zero tie events

  long cases() const { return agreements + static_cast<long>(disagreements.size()); }
  bool passed() const { return disagreements.empty() && !(tie_free_claimed && tie_events > 0); }
};

struct VerifyOptions {
  int trials = 100;
  int max_size = 0;  // 0 selects the theorem's default size bound
  std::uint64_t seed = 1;
  int workers = 1;
};

/// thm2, thm3, thiele, rev-thiele, phragmen, monroe, mes, mes-notie,
/// mes-seqp, spcc, sccc, optl.
const std::vector<std::string>& theorem_ids();

/// Generates seeded instances and checks both sides of the theorem's
/// equivalence on every (instance, vertex) case. The report is identical for
/// any worker count.
VerifyReport verify_theorem(const std::string& theorem_id, const VerifyOptions& options);

std::string format_report(const VerifyReport& report);

}  // namespace abc
