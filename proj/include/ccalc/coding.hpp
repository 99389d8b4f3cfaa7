#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "ccalc/formula.hpp"

namespace ccalc::logic {

using BigInt = boost::multiprecision::cpp_int;

/// Structural numbering of formulas.  code(f) = pair(tag, payload) under the
/// Cantor pairing (a+b)(a+b+1)/2 + b, with tags
///   0 Atom     payload = name in base 38 (a..z -> 1..26, 0..9 -> 27..36,
///                        _ -> 37; most significant character first)
///   1 Bottom   payload 0
///   2 Top      payload 0
///   3 Not      payload = code(child)
///   4 And      payload = pair(code(left), code(right))
///   5 Or       likewise
///   6 Implies  likewise
///   7 N        payload = list code: nil -> 0, head:tail -> pair(head, tail)+1
/// Injective by construction; decode inverts exactly and rejects numbers that
/// code nothing.
BigInt cantor_pair(const BigInt& a, const BigInt& b);
std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z);

BigInt encode(const Formula& f);
Formula decode(const BigInt& code);

struct CodedFormula {
  Formula formula;
  BigInt code;
};

CodedFormula coded(const Formula& f);

/// Formula with one designated hole, marked by an atom name.
struct DiagTemplate {
  Formula body;
  std::string hole;
};

/// The numeral of a code: the atom "c<decimal digits>".
Formula quote_code(const BigInt& code);

/// Diagonal fixed point of a one-hole template C.  Three reserved atom
/// families carry the construction: "c<n>" numerals, "d<n>" deferred
/// diagonalizations, and "s" the self-application site.  With
///   A := C[hole := s],   D := C[hole := d<code(A)>],
/// mechanically expanding D (see expand_diag) yields C[hole := c<code(D)>],
/// i.e. C applied to D's own code.  Checked by expansion before returning.
/// Errors: hole occurs zero times or more than once, or the template body
/// itself uses a reserved atom.
CodedFormula fixed_point(const DiagTemplate& tmpl);

/// One expansion step: every atom "d<n>" becomes the numeral of
/// code(decode(n)[s := d<n>]).  Formulas without d-atoms are unchanged.
Formula expand_diag(const Formula& f);

}  // namespace ccalc::logic
