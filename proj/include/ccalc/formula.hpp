#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ccalc::logic {

enum class Kind : std::uint8_t { Atom, Bottom, Top, Not, And, Or, Implies, N };

/// Immutable propositional formula.  N is the variadic joint-denial
/// connective: N(f1,...,fk) holds iff every argument fails.
///
/// Copies share structure; equality is structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula joint_denial(std::vector<Formula> args);  // errors when empty

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const;
  std::size_t arity() const { return node_->args.size(); }
  const Formula& child(std::size_t i) const { return node_->args[i]; }
  const std::vector<Formula>& children() const { return node_->args; }

  bool operator==(const Formula& o) const;

  /// Canonical rendering; parse_formula(str()) reproduces the formula.
  std::string str() const;

  std::size_t node_count() const;

 private:
  struct Node {
    Kind kind;
    std::string name;            // Atom only
    std::vector<Formula> args;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest to tightest ("->" right-associative):
///   formula := imp
///   imp     := or ("->" imp)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "~" unary | atom | "0" | "1" | "(" formula ")"
///            | "N(" formula ("," formula)* ")"
///   atom    := [a-z][a-z0-9_]*
/// Throws parse_error with line/column on malformed input.
Formula parse_formula(std::string_view text);

/// Sorted, deduplicated atom names.
std::vector<std::string> atoms_of(const Formula& f);

/// Classical two-valued evaluation; errors on an atom missing from the map.
bool eval_classical(const Formula& f, const std::map<std::string, bool>& env);

/// Replace every occurrence of the named atom.
Formula substitute(const Formula& f, const std::string& atom, const Formula& repl);

/// Rewrite every N node as the conjunction of the negations of its arguments.
/// The result is N-free and equivalent under any semantics that defines N
/// this way (classical and intuitionistic alike).
Formula expand_n(const Formula& f);

}  // namespace ccalc::logic
