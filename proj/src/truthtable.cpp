#include "ccalc/truthtable.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ccalc/error.hpp"

namespace ccalc::logic {

std::string TruthTable::str(const std::string& heading) const {
  std::string out;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if (j) out += ' ';
    out += atoms[j];
  }
  if (!atoms.empty()) out += ' ';
  out += "| ";
  out += heading;
  out += '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (j) line += ' ';
      line += (r >> (atoms.size() - 1 - j) & 1u) ? '1' : '0';
    }
    if (!atoms.empty()) line += ' ';
    line += "| ";
    line += rows[r] ? '1' : '0';
    out += line;
    out += '\n';
  }
  return out;
}

TruthTable table_of(const Formula& f) { return table_of(f, atoms_of(f)); }

TruthTable table_of(const Formula& f, std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  for (const std::string& a : atoms_of(f))
    if (!std::binary_search(atoms.begin(), atoms.end(), a))
      throw domain_error("table atom list does not cover atom: " + a);
  if (atoms.size() > 20) throw domain_error("truth table limited to 20 atoms");
  TruthTable t;
  t.atoms = atoms;
  std::size_t n = atoms.size();
  t.rows.resize(std::size_t{1} << n);
  std::map<std::string, bool> env;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j)
      env[atoms[j]] = (r >> (n - 1 - j)) & 1u;
    t.rows[r] = eval_classical(f, env);
  }
  return t;
}

bool tables_equal_on_union(const Formula& a, const Formula& b) {
  std::vector<std::string> atoms = atoms_of(a);
  for (const std::string& s : atoms_of(b)) atoms.push_back(s);
  return table_of(a, atoms) == table_of(b, atoms);
}

namespace {

Formula n_of(Formula a) { return Formula::joint_denial({std::move(a)}); }
Formula n_of(Formula a, Formula b) {
  return Formula::joint_denial({std::move(a), std::move(b)});
}

Formula n_rewrite(const Formula& f, const Formula& scratch) {
  switch (f.kind()) {
    case Kind::Atom:
      return f;
    case Kind::Bottom:
      // jointly denying t and ~t can never succeed
      return n_of(scratch, n_of(scratch));
    case Kind::Top:
      return n_of(n_of(scratch, n_of(scratch)));
    case Kind::Not:
      return n_of(n_rewrite(f.child(0), scratch));
    case Kind::And:
      return n_of(n_of(n_rewrite(f.child(0), scratch)),
                  n_of(n_rewrite(f.child(1), scratch)));
    case Kind::Or:
      return n_of(n_of(n_rewrite(f.child(0), scratch),
                       n_rewrite(f.child(1), scratch)));
    case Kind::Implies:
      return n_of(n_of(n_of(n_rewrite(f.child(0), scratch)),
                       n_rewrite(f.child(1), scratch)));
    case Kind::N: {
      std::vector<Formula> args;
      args.reserve(f.arity());
      for (const Formula& a : f.children())
        args.push_back(n_rewrite(a, scratch));
      return Formula::joint_denial(std::move(args));
    }
  }
  throw domain_error("unreachable formula kind");
}

}  // namespace

Formula to_n_form(const Formula& f) {
  std::vector<std::string> atoms = atoms_of(f);
  Formula scratch =
      atoms.empty() ? Formula::atom("p0") : Formula::atom(atoms.front());
  return n_rewrite(f, scratch);
}

NorSurveyReport nor_complete_survey() {
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  // 4-bit profile over rows 00,01,10,11 with row 00 in the top bit
  auto bits_of_atom = [](bool second) {
    unsigned b = 0;
    for (unsigned r = 0; r < 4; ++r) {
      bool v = second ? (r & 1u) : (r >> 1 & 1u);
      b |= static_cast<unsigned>(v) << (3 - r);
    }
    return b;
  };

  NorSurveyReport rep;
  std::array<bool, 16> have{};
  struct Item {
    unsigned bits;
    Formula f;
  };
  std::vector<Item> frontier;
  auto admit = [&](unsigned bits, Formula f) {
    if (have[bits]) return;
    have[bits] = true;
    rep.entries[bits] = NorSurveyEntry{bits, f, false};
    frontier.push_back(Item{bits, std::move(f)});
  };
  admit(bits_of_atom(false), p);
  admit(bits_of_atom(true), q);

  // breadth-first closure under N; generation order is fixed, so the first
  // (hence recorded) realization of each profile is stable
  std::size_t done = 0;
  while (done < frontier.size()) {
    std::size_t level_end = frontier.size();
    for (std::size_t i = done; i < level_end; ++i)
      admit(~frontier[i].bits & 0xFu, n_of(frontier[i].f));
    for (std::size_t i = 0; i < level_end; ++i)
      for (std::size_t j = i; j < level_end; ++j)
        admit(~(frontier[i].bits | frontier[j].bits) & 0xFu,
              n_of(frontier[i].f, frontier[j].f));
    done = level_end;
    if (std::all_of(have.begin(), have.end(), [](bool b) { return b; })) break;
  }

  rep.complete = true;
  for (unsigned b = 0; b < 16; ++b) {
    if (!have[b]) {
      rep.complete = false;
      continue;
    }
    // verify against an independently computed truth table
    TruthTable t = table_of(rep.entries[b].formula, {"p", "q"});
    unsigned got = 0;
    for (unsigned r = 0; r < 4; ++r)
      got |= static_cast<unsigned>(t.rows[r]) << (3 - r);
    rep.entries[b].verified = got == b;
    if (!rep.entries[b].verified) rep.complete = false;
  }
  return rep;
}

std::string NorSurveyReport::str() const {
  std::string out = "binary truth functions over (p, q) in joint-denial form\n";
  for (const NorSurveyEntry& e : entries) {
    std::string bits;
    for (int i = 3; i >= 0; --i) bits += (e.bits >> i & 1u) ? '1' : '0';
    out += bits;
    out += "  ";
    out += e.verified ? "ok " : "BAD";
    out += "  ";
    out += e.formula.str();
    out += '\n';
  }
  out += complete ? "complete: all 16 realized\n" : "INCOMPLETE\n";
  return out;
}

std::vector<std::uint64_t> diag_table(
    const std::vector<std::vector<std::uint64_t>>& rows, std::size_t m) {
  if (rows.size() > m + 1)
    throw domain_error("diagonalization needs at most m+1 rows");
  for (const auto& row : rows)
    if (row.size() != m + 1)
      throw domain_error("every row must be defined on all of 0..m");
  std::vector<std::uint64_t> g;
  g.reserve(rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n][n] == UINT64_MAX)
      throw domain_error("diagonal value overflow");
    g.push_back(rows[n][n] + 1);
  }
  for (std::size_t n = 0; n < rows.size(); ++n)
    if (g[n] == rows[n][n])
      throw domain_error("antidiagonal failed to differ");  // unreachable
  return g;
}

}  // namespace ccalc::logic
