#include "ccalc/coding.hpp"

#include <boost/multiprecision/integer.hpp>

#include "ccalc/error.hpp"

namespace ccalc::logic {

BigInt cantor_pair(const BigInt& a, const BigInt& b) {
  BigInt s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z) {
  if (z < 0) throw domain_error("negative number is not a pair code");
  BigInt disc = 8 * z + 1;
  BigInt w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  BigInt t = w * (w + 1) / 2;
  BigInt b = z - t;
  return {w - b, b};
}

namespace {

BigInt str_code(const std::string& name) {
  BigInt v = 0;
  for (char c : name) {
    int d;
    if (c >= 'a' && c <= 'z')
      d = c - 'a' + 1;
    else if (c >= '0' && c <= '9')
      d = c - '0' + 27;
    else if (c == '_')
      d = 37;
    else
      throw domain_error("uncodable character in atom name");
    v = v * 38 + d;
  }
  return v;
}

std::string str_decode(BigInt v) {
  if (v <= 0) throw domain_error("number codes no atom name");
  std::string out;
  while (v > 0) {
    int d = static_cast<int>(v % 38);
    v /= 38;
    if (d == 0) throw domain_error("number codes no atom name");
    if (d <= 26)
      out += static_cast<char>('a' + d - 1);
    else if (d <= 36)
      out += static_cast<char>('0' + d - 27);
    else
      out += '_';
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

BigInt encode(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return cantor_pair(0, str_code(f.atom_name()));
    case Kind::Bottom:
      return cantor_pair(1, 0);
    case Kind::Top:
      return cantor_pair(2, 0);
    case Kind::Not:
      return cantor_pair(3, encode(f.child(0)));
    case Kind::And:
      return cantor_pair(4, cantor_pair(encode(f.child(0)), encode(f.child(1))));
    case Kind::Or:
      return cantor_pair(5, cantor_pair(encode(f.child(0)), encode(f.child(1))));
    case Kind::Implies:
      return cantor_pair(6, cantor_pair(encode(f.child(0)), encode(f.child(1))));
    case Kind::N: {
      BigInt list = 0;
      for (std::size_t i = f.arity(); i-- > 0;)
        list = cantor_pair(encode(f.child(i)), list) + 1;
      return cantor_pair(7, list);
    }
  }
  throw domain_error("unreachable formula kind");
}

Formula decode(const BigInt& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag == 0) return Formula::atom(str_decode(payload));
  if (tag == 1) {
    if (payload != 0) throw domain_error("bad bottom code");
    return Formula::bottom();
  }
  if (tag == 2) {
    if (payload != 0) throw domain_error("bad top code");
    return Formula::top();
  }
  if (tag == 3) return Formula::negate(decode(payload));
  if (tag >= 4 && tag <= 6) {
    auto [l, r] = cantor_unpair(payload);
    Formula lf = decode(l), rf = decode(r);
    if (tag == 4) return Formula::conj(lf, rf);
    if (tag == 5) return Formula::disj(lf, rf);
    return Formula::implies(lf, rf);
  }
  if (tag == 7) {
    std::vector<Formula> args;
    BigInt list = payload;
    while (list != 0) {
      auto [head, tail] = cantor_unpair(list - 1);
      args.push_back(decode(head));
      list = tail;
    }
    if (args.empty()) throw domain_error("N code with empty argument list");
    return Formula::joint_denial(std::move(args));
  }
  throw domain_error("number codes no formula (tag " + tag.str() + ")");
}

CodedFormula coded(const Formula& f) { return CodedFormula{f, encode(f)}; }

Formula quote_code(const BigInt& code) {
  return Formula::atom("c" + code.str());
}

namespace {

bool is_reserved(const std::string& name) {
  if (name == "s") return true;
  if (name.size() < 2) return false;
  if (name[0] != 'c' && name[0] != 'd') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return false;
  return true;
}

int count_atom(const Formula& f, const std::string& name) {
  if (f.kind() == Kind::Atom) return f.atom_name() == name ? 1 : 0;
  int n = 0;
  for (const Formula& a : f.children()) n += count_atom(a, name);
  return n;
}

void check_no_reserved(const Formula& f, const std::string& hole) {
  if (f.kind() == Kind::Atom) {
    if (f.atom_name() != hole && is_reserved(f.atom_name()))
      throw domain_error("template uses reserved atom: " + f.atom_name());
    return;
  }
  for (const Formula& a : f.children()) check_no_reserved(a, hole);
}

}  // namespace

CodedFormula fixed_point(const DiagTemplate& tmpl) {
  int holes = count_atom(tmpl.body, tmpl.hole);
  if (holes != 1)
    throw domain_error("template must have exactly one hole, found " +
                       std::to_string(holes));
  check_no_reserved(tmpl.body, tmpl.hole);

  Formula a_formula = substitute(tmpl.body, tmpl.hole, Formula::atom("s"));
  BigInt a = encode(a_formula);
  Formula d = substitute(tmpl.body, tmpl.hole, Formula::atom("d" + a.str()));
  CodedFormula out = coded(d);

  Formula want = substitute(tmpl.body, tmpl.hole, quote_code(out.code));
  if (!(expand_diag(out.formula) == want))
    throw domain_error("fixed point failed its expansion check");
  return out;
}

Formula expand_diag(const Formula& f) {
  if (f.kind() == Kind::Atom) {
    const std::string& name = f.atom_name();
    if (name.size() >= 2 && name[0] == 'd') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        if (name[i] < '0' || name[i] > '9') {
          digits = false;
          break;
        }
      if (digits) {
        BigInt n(name.substr(1));
        Formula inner = decode(n);
        Formula applied = substitute(inner, "s", f);
        return quote_code(encode(applied));
      }
    }
    return f;
  }
  switch (f.kind()) {
    case Kind::Not:
      return Formula::negate(expand_diag(f.child(0)));
    case Kind::And:
      return Formula::conj(expand_diag(f.child(0)), expand_diag(f.child(1)));
    case Kind::Or:
      return Formula::disj(expand_diag(f.child(0)), expand_diag(f.child(1)));
    case Kind::Implies:
      return Formula::implies(expand_diag(f.child(0)),
                              expand_diag(f.child(1)));
    case Kind::N: {
      std::vector<Formula> args;
      args.reserve(f.arity());
      for (const Formula& a : f.children()) args.push_back(expand_diag(a));
      return Formula::joint_denial(std::move(args));
    }
    default:
      return f;
  }
}

}  // namespace ccalc::logic
