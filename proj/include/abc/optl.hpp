#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "abc/intervals.hpp"

namespace abc {

enum class OptLVariant { spcc, sccc };

/// One computation path of the nondeterministic transducer.
struct OptLPath {
  int optv = 0;
  std::vector<int> choices;  // nextc per round
  bool accepted = false;
  mpz_class output_value;    // emitted 1/0 string read as a binary numeral
};

struct OptLResult {
  mpz_class max_output;
  int optv = 0;              // decoded from max_output
  std::vector<int> chosen;   // decoded from max_output
  std::uint64_t accepting_paths = 0;
  std::uint64_t total_paths = 0;
  /// Every accepting path with larger optv emitted a larger value.
  bool ordering_holds = true;
};

/// Runs the SP-CC / SC-CC transducer over every guess sequence (optv in
/// [0, n], then nextc each round) and keeps the largest accepted output.
/// Paths for different optv guesses are explored on separate workers.
/// Throws PreconditionError when (n + 1) * C(m, k) exceeds `cap`.
OptLResult optl_enumerate(const IntervalInstance& inst, OptLVariant variant, int workers = 1,
                          std::uint64_t cap = 2'000'000);

/// Replays one guess sequence literally. nullopt if the sequence is not a
/// legal path (a guess outside (lastc, m]).
std::optional<OptLPath> optl_run_path(const IntervalInstance& inst, OptLVariant variant, int optv,
                                      const std::vector<int>& choices);

struct DecodedOutput {
  int optv;
  std::vector<int> chosen;
};

/// Splits a binary output back into 1^(optv m(m+1)) 0 followed by k blocks
/// 1^c 0. Blocks are read from the least significant end because the numeral
/// drops the leading 0 emitted when optv = 0.
DecodedOutput optl_decode(const mpz_class& value, int m, int k);

}  // namespace abc
