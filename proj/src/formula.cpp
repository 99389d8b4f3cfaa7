#include "ccalc/formula.hpp"

#include <algorithm>
#include <cctype>

#include "ccalc/error.hpp"

namespace ccalc::logic {

const std::string& Formula::atom_name() const {
  if (node_->kind != Kind::Atom) throw domain_error("atom_name on a non-atom");
  return node_->name;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  if (node_->name != o.node_->name) return false;
  if (node_->args.size() != o.node_->args.size()) return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (!(node_->args[i] == o.node_->args[i])) return false;
  return true;
}

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  for (const Formula& a : node_->args) n += a.node_count();
  return n;
}

Formula Formula::atom(std::string name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    throw domain_error("atom name must start with a lowercase letter: " + name);
  for (char c : name)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      throw domain_error("bad character in atom name: " + name);
  auto node = std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}});
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  auto node = std::make_shared<const Node>(Node{Kind::Bottom, {}, {}});
  return Formula(std::move(node));
}

Formula Formula::top() {
  auto node = std::make_shared<const Node>(Node{Kind::Top, {}, {}});
  return Formula(std::move(node));
}

Formula Formula::negate(Formula f) {
  auto node = std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}});
  return Formula(std::move(node));
}

Formula Formula::conj(Formula a, Formula b) {
  auto node = std::make_shared<const Node>(
      Node{Kind::And, {}, {std::move(a), std::move(b)}});
  return Formula(std::move(node));
}

Formula Formula::disj(Formula a, Formula b) {
  auto node = std::make_shared<const Node>(
      Node{Kind::Or, {}, {std::move(a), std::move(b)}});
  return Formula(std::move(node));
}

Formula Formula::implies(Formula a, Formula b) {
  auto node = std::make_shared<const Node>(
      Node{Kind::Implies, {}, {std::move(a), std::move(b)}});
  return Formula(std::move(node));
}

Formula Formula::joint_denial(std::vector<Formula> args) {
  if (args.empty()) throw domain_error("N requires at least one argument");
  auto node = std::make_shared<const Node>(Node{Kind::N, {}, std::move(args)});
  return Formula(std::move(node));
}

namespace {

// Precedence levels for printing: 0 implication, 1 disjunction,
// 2 conjunction, 3 unary/primary.
int level_of(Kind k) {
  switch (k) {
    case Kind::Implies: return 0;
    case Kind::Or: return 1;
    case Kind::And: return 2;
    default: return 3;
  }
}

void print(const Formula& f, int min_level, std::string& out) {
  bool parens = level_of(f.kind()) < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::Atom:
      out += f.atom_name();
      break;
    case Kind::Bottom:
      out += '0';
      break;
    case Kind::Top:
      out += '1';
      break;
    case Kind::Not:
      out += '~';
      print(f.child(0), 3, out);
      break;
    case Kind::And:
      print(f.child(0), 2, out);
      out += " & ";
      print(f.child(1), 3, out);
      break;
    case Kind::Or:
      print(f.child(0), 1, out);
      out += " | ";
      print(f.child(1), 2, out);
      break;
    case Kind::Implies:
      // right-associative: the left side must bind tighter
      print(f.child(0), 1, out);
      out += " -> ";
      print(f.child(1), 0, out);
      break;
    case Kind::N:
      out += "N(";
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (i) out += ", ";
        print(f.child(i), 0, out);
      }
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance(char c) {
    ++pos;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      advance(text[pos]);
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      advance(c);
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      advance('-');
      advance('>');
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw parse_error(msg, line, col);
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() ||
        !std::islower(static_cast<unsigned char>(text[pos])))
      fail("expected an atom");
    std::string out;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_') {
        out += c;
        advance(c);
      } else {
        break;
      }
    }
    return out;
  }
};

struct Parser {
  Lexer lx;

  Formula formula() { return imp(); }

  Formula imp() {
    Formula lhs = disj();
    if (lx.eat_arrow()) return Formula::implies(std::move(lhs), imp());
    return lhs;
  }

  Formula disj() {
    Formula acc = conj();
    while (true) {
      // don't confuse "|" with nothing else; single-char lookahead suffices
      if (lx.peek() == '|') {
        lx.eat('|');
        acc = Formula::disj(std::move(acc), conj());
      } else {
        break;
      }
    }
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (lx.peek() == '&') {
      lx.eat('&');
      acc = Formula::conj(std::move(acc), unary());
    }
    return acc;
  }

  Formula unary() {
    char c = lx.peek();
    if (c == '~') {
      lx.eat('~');
      return Formula::negate(unary());
    }
    if (c == '0') {
      lx.eat('0');
      return Formula::bottom();
    }
    if (c == '1') {
      lx.eat('1');
      return Formula::top();
    }
    if (c == '(') {
      lx.eat('(');
      Formula f = imp();
      if (!lx.eat(')')) lx.fail("expected ')'");
      return f;
    }
    if (c == 'N') {
      lx.advance('N');
      if (!lx.eat('(')) lx.fail("expected '(' after N");
      std::vector<Formula> args;
      args.push_back(imp());
      while (lx.eat(',')) args.push_back(imp());
      if (!lx.eat(')')) lx.fail("expected ')' closing N");
      return Formula::joint_denial(std::move(args));
    }
    if (std::islower(static_cast<unsigned char>(c)))
      return Formula::atom(lx.ident());
    lx.fail("expected a formula");
  }
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p{Lexer{text}};
  Formula f = p.formula();
  if (!p.lx.eof()) p.lx.fail("trailing input after formula");
  return f;
}

namespace {
void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Kind::Atom) {
    out.push_back(f.atom_name());
    return;
  }
  for (const Formula& a : f.children()) collect_atoms(a, out);
}
}  // namespace

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool eval_classical(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = env.find(f.atom_name());
      if (it == env.end())
        throw domain_error("unbound atom in evaluation: " + f.atom_name());
      return it->second;
    }
    case Kind::Bottom:
      return false;
    case Kind::Top:
      return true;
    case Kind::Not:
      return !eval_classical(f.child(0), env);
    // no short-circuiting: every subformula is evaluated so an unbound
    // atom is detected regardless of where it sits
    case Kind::And: {
      bool l = eval_classical(f.child(0), env);
      bool r = eval_classical(f.child(1), env);
      return l && r;
    }
    case Kind::Or: {
      bool l = eval_classical(f.child(0), env);
      bool r = eval_classical(f.child(1), env);
      return l || r;
    }
    case Kind::Implies: {
      bool l = eval_classical(f.child(0), env);
      bool r = eval_classical(f.child(1), env);
      return !l || r;
    }
    case Kind::N: {
      bool any = false;
      for (const Formula& a : f.children())
        if (eval_classical(a, env)) any = true;
      return !any;
    }
  }
  throw domain_error("unreachable formula kind");
}

Formula substitute(const Formula& f, const std::string& atom,
                   const Formula& repl) {
  switch (f.kind()) {
    case Kind::Atom:
      return f.atom_name() == atom ? repl : f;
    case Kind::Bottom:
    case Kind::Top:
      return f;
    case Kind::Not:
      return Formula::negate(substitute(f.child(0), atom, repl));
    case Kind::And:
      return Formula::conj(substitute(f.child(0), atom, repl),
                           substitute(f.child(1), atom, repl));
    case Kind::Or:
      return Formula::disj(substitute(f.child(0), atom, repl),
                           substitute(f.child(1), atom, repl));
    case Kind::Implies:
      return Formula::implies(substitute(f.child(0), atom, repl),
                              substitute(f.child(1), atom, repl));
    case Kind::N: {
      std::vector<Formula> args;
      args.reserve(f.arity());
      for (const Formula& a : f.children())
        args.push_back(substitute(a, atom, repl));
      return Formula::joint_denial(std::move(args));
    }
  }
  throw domain_error("unreachable formula kind");
}

Formula expand_n(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
    case Kind::Top:
      return f;
    case Kind::Not:
      return Formula::negate(expand_n(f.child(0)));
    case Kind::And:
      return Formula::conj(expand_n(f.child(0)), expand_n(f.child(1)));
    case Kind::Or:
      return Formula::disj(expand_n(f.child(0)), expand_n(f.child(1)));
    case Kind::Implies:
      return Formula::implies(expand_n(f.child(0)), expand_n(f.child(1)));
    case Kind::N: {
      Formula acc = Formula::negate(expand_n(f.child(0)));
      for (std::size_t i = 1; i < f.arity(); ++i)
        acc = Formula::conj(std::move(acc),
                            Formula::negate(expand_n(f.child(i))));
      return acc;
    }
  }
  throw domain_error("unreachable formula kind");
}

}  // namespace ccalc::logic
