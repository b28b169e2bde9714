#include "abc/optl.hpp"

#include <algorithm>
#include <stdexcept>

#include "abc/election.hpp"
#include "abc/parallel.hpp"

namespace abc {

namespace {

// Work-tape state of the transducer plus the output written so far.
struct Tape {
  int lastc = 0;
  int lastv = 0;
  long numv = 0;
  mpz_class output;
  std::vector<char> counted;  // SP-CC: intervals already credited to numv
};

void append_block(mpz_class& out, unsigned long ones) {
  // out <- out . 1^ones 0
  mpz_class block = 1;
  block <<= ones;
  block -= 1;
  block <<= 1;
  out <<= ones + 1;
  out += block;
}

class Transducer {
 public:
  Transducer(const IntervalInstance& inst, OptLVariant variant) : inst_(inst), variant_(variant) {
    if ((variant == OptLVariant::spcc) != (inst.kind == AxisKind::sp)) {
      throw PreconditionError("OptL variant does not match the interval instance");
    }
    m_ = variant == OptLVariant::spcc ? inst.universe_size : inst.num_entries();
    n_ = variant == OptLVariant::spcc ? inst.num_entries() : inst.universe_size;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return inst_.budget; }

  Tape start(int optv) const {
    Tape t;
    append_block(t.output, static_cast<unsigned long>(optv) * m_ * (m_ + 1));
    t.counted.assign(inst_.num_entries(), 0);
    return t;
  }

  // One loop iteration after nextc was guessed.
  void step(Tape& t, int nextc) const {
    if (variant_ == OptLVariant::spcc) {
      for (int i = 0; i < inst_.num_entries(); ++i) {
        const auto& iv = inst_.intervals[i];
        if (iv && iv->start > t.lastc && iv->contains(nextc)) {
          if (t.counted[i]) throw std::logic_error("SP-CC path credited an interval twice");
          t.counted[i] = 1;
          ++t.numv;
        }
      }
      t.lastc = nextc;
      append_block(t.output, static_cast<unsigned long>(t.lastc));
      return;
    }
    const auto& iv = inst_.intervals[nextc - 1];
    if (iv) {
      const int lo = std::max(t.lastv + 1, iv->start);
      if (iv->end >= lo) t.numv += iv->end - lo + 1;
    }
    append_block(t.output, static_cast<unsigned long>(nextc));
    t.lastc = nextc;
    if (iv && iv->end > t.lastv) t.lastv = iv->end;
  }

 private:
  const IntervalInstance& inst_;
  OptLVariant variant_;
  int m_ = 0;
  int n_ = 0;
};

struct OptvSummary {
  std::uint64_t accepting = 0;
  std::uint64_t total = 0;
  std::optional<mpz_class> min_output;
  std::optional<mpz_class> max_output;
};

void explore(const Transducer& machine, int optv, int round, const Tape& tape, OptvSummary& summary) {
  if (round > machine.k()) {
    ++summary.total;
    if (tape.numv != optv) return;
    ++summary.accepting;
    if (!summary.max_output || tape.output > *summary.max_output) summary.max_output = tape.output;
    if (!summary.min_output || tape.output < *summary.min_output) summary.min_output = tape.output;
    return;
  }
  // No nextc with lastc < nextc <= m exists, so the guess cannot be made.
  if (tape.lastc >= machine.m()) {
    ++summary.total;
    return;
  }
  for (int nextc = tape.lastc + 1; nextc <= machine.m(); ++nextc) {
    Tape next = tape;
    machine.step(next, nextc);
    explore(machine, optv, round + 1, next, summary);
  }
}

}  // namespace

std::optional<OptLPath> optl_run_path(const IntervalInstance& inst, OptLVariant variant, int optv,
                                      const std::vector<int>& choices) {
  const Transducer machine(inst, variant);
  if (optv < 0 || optv > machine.n() || static_cast<int>(choices.size()) != machine.k()) return std::nullopt;
  Tape tape = machine.start(optv);
  for (int nextc : choices) {
    if (nextc <= tape.lastc || nextc > machine.m()) return std::nullopt;
    machine.step(tape, nextc);
  }
  return OptLPath{optv, choices, tape.numv == optv, tape.output};
}

OptLResult optl_enumerate(const IntervalInstance& inst, OptLVariant variant, int workers, std::uint64_t cap) {
  const Transducer machine(inst, variant);
  const int m = machine.m();
  const int k = machine.k();
  if (k < 1) throw PreconditionError("OptL enumeration needs k >= 1");
  std::uint64_t paths = static_cast<std::uint64_t>(machine.n()) + 1;
  for (int i = 1; i <= std::min(k, m); ++i) {
    paths = paths * static_cast<std::uint64_t>(m - std::min(k, m) + i) / static_cast<std::uint64_t>(i);
    if (paths > cap) throw PreconditionError("OptL path enumeration exceeds the cap");
  }

  std::vector<OptvSummary> per_optv(machine.n() + 1);
  parallel_for(workers, per_optv.size(), [&](std::size_t optv) {
    explore(machine, static_cast<int>(optv), 1, machine.start(static_cast<int>(optv)), per_optv[optv]);
  });

  OptLResult out;
  std::optional<mpz_class> previous_max;
  for (const auto& s : per_optv) {
    out.total_paths += s.total;
    out.accepting_paths += s.accepting;
    if (!s.max_output) continue;
    if (previous_max && !(*previous_max < *s.min_output)) out.ordering_holds = false;
    previous_max = s.max_output;
    out.max_output = *s.max_output;
  }
  if (out.accepting_paths == 0) throw std::logic_error("OptL transducer has no accepting path");
  DecodedOutput decoded = optl_decode(out.max_output, m, k);
  out.optv = decoded.optv;
  out.chosen = std::move(decoded.chosen);
  return out;
}

DecodedOutput optl_decode(const mpz_class& value, int m, int k) {
  const long bits = value == 0 ? 0 : static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2));
  long pos = 0;  // bit index from the least significant end
  const auto bit = [&](long i) { return i < bits && mpz_tstbit(value.get_mpz_t(), i) != 0; };
  DecodedOutput out{0, {}};
  for (int round = 0; round < k; ++round) {
    if (bit(pos)) throw std::invalid_argument("OptL output block does not end in 0");
    ++pos;
    int ones = 0;
    while (bit(pos)) {
      ++ones;
      ++pos;
    }
    out.chosen.push_back(ones);
  }
  std::reverse(out.chosen.begin(), out.chosen.end());
  // Remaining high part: 1^(optv m(m+1)) 0, where the 0 vanishes for optv = 0.
  if (pos < bits) {
    if (bit(pos)) throw std::invalid_argument("OptL prefix does not end in 0");
    ++pos;
  }
  const long prefix_ones = bits - pos;
  for (long i = pos; i < bits; ++i) {
    if (!bit(i)) throw std::invalid_argument("OptL prefix is not a block of ones");
  }
  const long unit = static_cast<long>(m) * (m + 1);
  if (prefix_ones % unit != 0) throw std::invalid_argument("OptL prefix length is not a multiple of m(m+1)");
  out.optv = static_cast<int>(prefix_ones / unit);
  return out;
}

}  // namespace abc
