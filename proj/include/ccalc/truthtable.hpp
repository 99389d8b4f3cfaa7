#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ccalc/formula.hpp"

namespace ccalc::logic {

/// Truth table over a sorted atom list.  Row r assigns atom j (0-based in the
/// sorted list of n atoms) the bit (r >> (n-1-j)) & 1, i.e. the first atom is
/// the most significant column and rows count 00, 01, 10, 11, ...
struct TruthTable {
  std::vector<std::string> atoms;
  std::vector<bool> rows;  // size 1 << atoms.size()

  bool operator==(const TruthTable&) const = default;

  /// Text form: header "p q | f", then one row per line with 0/1 entries.
  std::string str(const std::string& heading) const;
};

TruthTable table_of(const Formula& f);

/// Table over a caller-chosen atom list, which must cover the formula's atoms.
TruthTable table_of(const Formula& f, std::vector<std::string> atoms);

bool tables_equal_on_union(const Formula& a, const Formula& b);

/// Rewrite into joint-denial normal form: the result contains only atoms and
/// N nodes and has the same classical truth table.  Connectives map as
///   ~a      => N(a)
///   a | b   => N(N(a, b))
///   a & b   => N(N(a), N(b))
///   a -> b  => N(N(N(a), b))
/// and the constants use a scratch atom t (the first atom of the formula in
/// sorted order, or the reserved "p0" when the formula is closed):
///   0 => N(t, N(t))        1 => N(N(t, N(t)))
Formula to_n_form(const Formula& f);

/// One realized binary truth function.  bits packs rows 00,01,10,11 of the
/// (p,q) table, row 00 in bit 3 down to row 11 in bit 0.
struct NorSurveyEntry {
  unsigned bits = 0;
  Formula formula = Formula::bottom();
  bool verified = false;
};

/// Joint denial is functionally complete: every one of the 16 binary truth
/// functions over atoms p, q written with N alone.  Formulas are found by a
/// deterministic breadth-first closure starting from {p, q}, so the report is
/// stable across runs.
struct NorSurveyReport {
  std::array<NorSurveyEntry, 16> entries;
  bool complete = false;
  std::string str() const;
};

NorSurveyReport nor_complete_survey();

/// Cantor-style antidiagonal: rows is a finite sequence of total functions on
/// 0..m given as value vectors of length m+1, at most m+1 of them.  Returns g
/// with g(n) = rows[n](n) + 1, which therefore differs from every listed row
/// at its own index (checked).
std::vector<std::uint64_t> diag_table(
    const std::vector<std::vector<std::uint64_t>>& rows, std::size_t m);

}  // namespace ccalc::logic
