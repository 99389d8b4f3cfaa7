#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccalc/exec.hpp"

namespace ccalc::machines {

/// One table cell: write a symbol, move, then either continue in a state
/// or halt.  Halting is a transition target, not an extra state.
struct Action {
  int write;
  int move;  // 0 = L, 1 = R
  int next;  // state index, or kHalt

  bool operator==(const Action&) const = default;
};

inline constexpr int kHalt = -1;

/// Total transition table over states x symbols, symbol 0 the blank.
class MachineSpec {
 public:
  MachineSpec(int states, int symbols, std::vector<Action> table);

  int states() const { return states_; }
  int symbols() const { return symbols_; }
  const Action& at(int state, int symbol) const;

  std::string str() const;  // the file format, cells in (state, symbol) order

 private:
  int states_;
  int symbols_;
  std::vector<Action> table_;
};

/// Canonical cell encoding in base 2sk+1, used by the enumeration.  Code 0
/// is the halting action (write blank, move R, halt); code c >= 1 unpacks
/// c-1 as (write * 2 + move) * s + next.  A whole machine is the base-B
/// numeral of its cells, cell (0,0) most significant.
std::uint64_t total_specs(int states, int symbols);
MachineSpec spec_from_code(int states, int symbols, std::uint64_t code);
std::uint64_t code_of_spec(const MachineSpec& m);  // errors off canon halts

/// File format, line-based with # comments:
///   states 2
///   symbols 2
///   0 0 -> 1 R 1
///   ...
/// Every cell must appear exactly once; the halt target is H.
MachineSpec parse_machine_file(std::string_view text);

enum class Outcome { Halted, BudgetExhausted };

struct RunResult {
  Outcome outcome;
  std::int64_t steps;    // executed, the halting transition included
  std::string tape;      // non-blank span as digits, "" when all blank
  int span_start;        // absolute position of tape[0]; 0 when tape empty
  int head;              // absolute final head position

  bool operator==(const RunResult&) const = default;
  std::string str() const;
};

/// Deterministic simulation on a two-way infinite blank-0 tape, head
/// starting at cell 0 (the first input symbol).  A halting transition
/// still writes and moves, and its step counts.
RunResult run(const MachineSpec& m, std::string_view input, std::int64_t budget);

/// Exhaustive blank-tape census of the canonical code space.
struct EnumReport {
  int states;
  int symbols;
  std::int64_t budget;
  std::uint64_t total;
  std::uint64_t halted_blank;
  std::uint64_t halted_nonblank;
  std::uint64_t budget_exhausted;

  /// halted_nonblank / total, a recorded observation rather than a claim.
  double nonblank_fraction() const;

  std::string str() const;  // byte-stable report
};

/// states must be 2 and symbols 2 or 3, budget 1..10000.  Counts are
/// plain sums over the code space, so thread count never changes the
/// report.
EnumReport enumerate_specs(int states, int symbols, std::int64_t budget,
                           ExecMode mode = ExecMode::Parallel);

}  // namespace ccalc::machines
