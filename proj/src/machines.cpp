#include "ccalc/machines.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ccalc/error.hpp"

namespace ccalc::machines {

MachineSpec::MachineSpec(int states, int symbols, std::vector<Action> table)
    : states_(states), symbols_(symbols), table_(std::move(table)) {
  if (states_ < 1 || states_ > 8) throw domain_error("states must be 1..8");
  if (symbols_ < 2 || symbols_ > 8) throw domain_error("symbols must be 2..8");
  if (table_.size() != static_cast<std::size_t>(states_ * symbols_))
    throw domain_error("transition table must cover every (state, symbol)");
  for (const Action& a : table_) {
    if (a.write < 0 || a.write >= symbols_)
      throw domain_error("write symbol out of range");
    if (a.move != 0 && a.move != 1) throw domain_error("move must be L or R");
    if (a.next != kHalt && (a.next < 0 || a.next >= states_))
      throw domain_error("next state out of range");
  }
}

const Action& MachineSpec::at(int state, int symbol) const {
  return table_[state * symbols_ + symbol];
}

std::string MachineSpec::str() const {
  std::string out = "states " + std::to_string(states_) + "\n";
  out += "symbols " + std::to_string(symbols_) + "\n";
  for (int q = 0; q < states_; ++q)
    for (int a = 0; a < symbols_; ++a) {
      const Action& act = at(q, a);
      out += std::to_string(q) + " " + std::to_string(a) + " -> " +
             std::to_string(act.write) + (act.move ? " R " : " L ") +
             (act.next == kHalt ? std::string("H") : std::to_string(act.next)) +
             "\n";
    }
  return out;
}

std::uint64_t total_specs(int states, int symbols) {
  if (states < 1 || symbols < 2) throw domain_error("bad machine class");
  std::uint64_t base = 2ull * states * symbols + 1;
  int cells = states * symbols;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) {
    if (total > UINT64_MAX / base) throw domain_error("code space overflows");
    total *= base;
  }
  return total;
}

MachineSpec spec_from_code(int states, int symbols, std::uint64_t code) {
  std::uint64_t base = 2ull * states * symbols + 1;
  int cells = states * symbols;
  std::vector<Action> table(cells);
  for (int i = cells - 1; i >= 0; --i) {
    std::uint64_t c = code % base;
    code /= base;
    if (c == 0) {
      table[i] = Action{0, 1, kHalt};
    } else {
      std::uint64_t rest = c - 1;
      int next = static_cast<int>(rest % states);
      rest /= states;
      int move = static_cast<int>(rest % 2);
      int write = static_cast<int>(rest / 2);
      table[i] = Action{write, move, next};
    }
  }
  if (code != 0) throw domain_error("machine code out of range");
  return MachineSpec(states, symbols, std::move(table));
}

std::uint64_t code_of_spec(const MachineSpec& m) {
  std::uint64_t base = 2ull * m.states() * m.symbols() + 1;
  std::uint64_t code = 0;
  for (int q = 0; q < m.states(); ++q)
    for (int a = 0; a < m.symbols(); ++a) {
      const Action& act = m.at(q, a);
      std::uint64_t c;
      if (act.next == kHalt) {
        if (act.write != 0 || act.move != 1)
          throw domain_error(
              "halting cell is off the canonical form (write blank, move R)");
        c = 0;
      } else {
        c = 1 + static_cast<std::uint64_t>(act.write * 2 + act.move) *
                    m.states() +
            act.next;
      }
      code = code * base + c;
    }
  return code;
}

MachineSpec parse_machine_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int states = -1, symbols = -1;
  std::vector<Action> table;
  std::vector<bool> filled;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string w;
    while (ls >> w) tok.push_back(w);
    if (tok.empty()) continue;
    auto num = [&](const std::string& s) {
      try {
        std::size_t used;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw parse_error("expected a number, got " + s, lineno, 1);
      }
    };
    if (tok[0] == "states" && tok.size() == 2) {
      states = num(tok[1]);
    } else if (tok[0] == "symbols" && tok.size() == 2) {
      symbols = num(tok[1]);
    } else if (tok.size() == 6 && tok[2] == "->") {
      if (states < 0 || symbols < 0)
        throw parse_error("transition before states/symbols header", lineno, 1);
      if (table.empty()) {
        table.assign(states * symbols, Action{0, 1, kHalt});
        filled.assign(states * symbols, false);
      }
      int q = num(tok[0]), a = num(tok[1]), wsym = num(tok[3]);
      if (q >= states || a >= symbols)
        throw parse_error("cell out of range", lineno, 1);
      if (tok[4] != "L" && tok[4] != "R")
        throw parse_error("move must be L or R", lineno, 1);
      int next = tok[5] == "H" ? kHalt : num(tok[5]);
      int idx = q * symbols + a;
      if (filled[idx]) throw parse_error("duplicate cell", lineno, 1);
      filled[idx] = true;
      table[idx] = Action{wsym, tok[4] == "R" ? 1 : 0, next};
    } else {
      throw parse_error("bad machine line", lineno, 1);
    }
  }
  if (states < 0 || symbols < 0)
    throw parse_error("missing states/symbols header", lineno, 1);
  if (table.empty()) filled.assign(states * symbols, false);
  for (std::size_t i = 0; i < filled.size(); ++i)
    if (!filled[i])
      throw parse_error("missing cell " + std::to_string(i / symbols) + " " +
                            std::to_string(i % symbols),
                        lineno, 1);
  if (filled.empty())
    throw parse_error("missing transition table", lineno, 1);
  try {
    return MachineSpec(states, symbols, std::move(table));
  } catch (const domain_error& e) {
    throw parse_error(e.what(), lineno, 1);
  }
}

namespace {

// simulation core over a caller-owned tape buffer; the tape must hold
// 2 * budget + input + 1 cells so the head can never leave it
RunResult run_on(const MachineSpec& m, std::string_view input,
                 std::int64_t budget, std::vector<std::uint8_t>& tape) {
  std::int64_t origin = budget;
  std::int64_t lo = origin, hi = origin + 1;  // touched span, half-open
  std::fill(tape.begin(), tape.end(), 0);
  for (std::size_t i = 0; i < input.size(); ++i) {
    int v = input[i] - '0';
    if (v < 0 || v >= m.symbols())
      throw domain_error("input symbol out of range: " +
                         std::string(1, input[i]));
    tape[origin + i] = static_cast<std::uint8_t>(v);
  }
  hi = std::max(hi, origin + static_cast<std::int64_t>(input.size()));

  std::int64_t pos = origin;
  int state = 0;
  std::int64_t steps = 0;
  bool halted = false;
  while (steps < budget) {
    const Action& act = m.at(state, tape[pos]);
    tape[pos] = static_cast<std::uint8_t>(act.write);
    pos += act.move ? 1 : -1;
    lo = std::min(lo, pos);
    hi = std::max(hi, pos + 1);
    ++steps;
    if (act.next == kHalt) {
      halted = true;
      break;
    }
    state = act.next;
  }

  RunResult r;
  r.outcome = halted ? Outcome::Halted : Outcome::BudgetExhausted;
  r.steps = steps;
  std::int64_t a = lo, b = hi;
  while (a < b && tape[a] == 0) ++a;
  while (b > a && tape[b - 1] == 0) --b;
  for (std::int64_t i = a; i < b; ++i)
    r.tape += static_cast<char>('0' + tape[i]);
  r.span_start = r.tape.empty() ? 0 : static_cast<int>(a - origin);
  r.head = static_cast<int>(pos - origin);
  return r;
}

}  // namespace

std::string RunResult::str() const {
  std::string out =
      outcome == Outcome::Halted ? "outcome: halted\n" : "outcome: budget exhausted\n";
  out += "steps: " + std::to_string(steps) + "\n";
  out += "tape: " + (tape.empty() ? std::string("blank") : tape) + "\n";
  if (!tape.empty())
    out += "tape start: " + std::to_string(span_start) + "\n";
  out += "head: " + std::to_string(head) + "\n";
  return out;
}

RunResult run(const MachineSpec& m, std::string_view input, std::int64_t budget) {
  if (budget < 1 || budget > 100000000)
    throw domain_error("budget must be 1..100000000");
  std::vector<std::uint8_t> tape(2 * budget + input.size() + 1);
  return run_on(m, input, budget, tape);
}

double EnumReport::nonblank_fraction() const {
  return total == 0 ? 0.0 : static_cast<double>(halted_nonblank) / total;
}

std::string EnumReport::str() const {
  char frac[32];
  std::snprintf(frac, sizeof frac, "%.6f", nonblank_fraction());
  std::string out;
  out += "states: " + std::to_string(states) + "\n";
  out += "symbols: " + std::to_string(symbols) + "\n";
  out += "budget: " + std::to_string(budget) + "\n";
  out += "total: " + std::to_string(total) + "\n";
  out += "halted blank: " + std::to_string(halted_blank) + "\n";
  out += "halted nonblank: " + std::to_string(halted_nonblank) + "\n";
  out += "budget exhausted: " + std::to_string(budget_exhausted) + "\n";
  out += "nonblank fraction: " + std::string(frac) + "\n";
  return out;
}

EnumReport enumerate_specs(int states, int symbols, std::int64_t budget,
                           ExecMode mode) {
  if (states != 2) throw domain_error("enumeration covers 2-state machines");
  if (symbols != 2 && symbols != 3)
    throw domain_error("enumeration covers 2 or 3 symbols");
  if (budget < 1 || budget > 10000) throw domain_error("budget must be 1..10000");
  std::uint64_t total = total_specs(states, symbols);

  std::uint64_t blank = 0, nonblank = 0, exhausted = 0;
  if (mode == ExecMode::Serial) {
    std::vector<std::uint8_t> tape(2 * budget + 1);
    for (std::uint64_t code = 0; code < total; ++code) {
      MachineSpec m = spec_from_code(states, symbols, code);
      RunResult r = run_on(m, "", budget, tape);
      if (r.outcome == Outcome::BudgetExhausted)
        ++exhausted;
      else if (r.tape.empty())
        ++blank;
      else
        ++nonblank;
    }
  } else {
#pragma omp parallel reduction(+ : blank, nonblank, exhausted)
    {
      std::vector<std::uint8_t> tape(2 * budget + 1);
#pragma omp for schedule(static)
      for (std::int64_t sc = 0; sc < static_cast<std::int64_t>(total); ++sc) {
        MachineSpec m = spec_from_code(states, symbols, sc);
        RunResult r = run_on(m, "", budget, tape);
        if (r.outcome == Outcome::BudgetExhausted)
          ++exhausted;
        else if (r.tape.empty())
          ++blank;
        else
          ++nonblank;
      }
    }
  }
  return EnumReport{states, symbols, budget, total, blank, nonblank, exhausted};
}

}  // namespace ccalc::machines
