#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ccalc/exec.hpp"
#include "ccalc/formula.hpp"

namespace ccalc::heyting {

/// Finite partial order over labeled elements.  The relation is stored as a
/// dense boolean matrix and validated (reflexive, antisymmetric, transitive)
/// at construction.
class FinitePoset {
 public:
  /// Build from the given leq pairs.  With close=true the reflexive
  /// transitive closure is applied first; antisymmetry failures throw either
  /// way.
  FinitePoset(std::vector<std::string> labels,
              const std::vector<std::pair<int, int>>& leq_pairs,
              bool close = false);

  static FinitePoset chain(int n);      // labels "0".."n-1"
  static FinitePoset antichain(int n);  // labels "0".."n-1", order discrete

  std::size_t size() const { return labels_.size(); }
  bool leq(int a, int b) const { return leq_[a * labels_.size() + b]; }
  const std::string& label(int i) const { return labels_[i]; }
  int index(const std::string& label) const;  // errors when missing
  const std::vector<std::string>& labels() const { return labels_; }

  /// Cover pairs (a, b): a < b with nothing strictly between, sorted.
  std::vector<std::pair<int, int>> hasse_edges() const;

  bool operator==(const FinitePoset&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Every partial order on n labeled points (labels "e0".."e<n-1>"), in
/// ascending order of the off-diagonal relation bitmask read row-major with
/// the first cell most significant.  n <= 5.
std::vector<FinitePoset> all_posets(int n);

/// Hasse diagram in DOT form, bottom-up edges.
std::string to_dot(const FinitePoset& p, const std::string& graph_name);

struct LawViolation {
  std::string law;
  std::vector<int> elems;  // witness elements
  auto operator<=>(const LawViolation&) const = default;
};

struct LawReport {
  bool ok = true;
  std::vector<LawViolation> violations;  // sorted, deduplicated
  std::string str(const class HeytingAlgebra& h) const;
};

/// Finite Heyting algebra: a bounded lattice whose implication satisfies the
/// residuation adjunction meet(a, x) <= b  iff  x <= imp(a, b).  Negation is
/// imp(a, bottom).  All operation tables are materialized at construction.
class HeytingAlgebra {
 public:
  /// Totally ordered algebra with n elements labeled as the rationals
  /// k/(n-1) in lowest terms ("0", "1/3", "2/3", "1").  Implication uses the
  /// closed form: imp(a, b) = top when a <= b, else b.
  static HeytingAlgebra chain(int n);  // n >= 1

  /// Algebra of downward-closed subsets of a poset, ordered by inclusion.
  /// Element labels are member sets like "{a,c}"; carrier sorted by size then
  /// by mask.  imp(U, V) is the union of every downset W with U∩W ⊆ V.
  static HeytingAlgebra downset_algebra(const FinitePoset& p);

  /// Treat the poset itself as the carrier: meets, joins and residuals are
  /// found by brute-force search.  Throws when some pair has no meet or join
  /// (not a lattice).  When a residual set has no greatest element (the
  /// lattice is not distributive) the join of the candidates is stored so
  /// that check_laws can name the residuation failure.
  static HeytingAlgebra from_poset(const FinitePoset& p);

  /// Trusting constructor for prebuilt tables; only shapes are checked.
  /// check_laws is the verifier, which lets tests feed in corrupt tables.
  static HeytingAlgebra from_tables(FinitePoset p, int bottom, int top,
                                    std::vector<int> meet,
                                    std::vector<int> join,
                                    std::vector<int> imp);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  const std::string& label(int i) const { return poset_.label(i); }
  int index(const std::string& label) const { return poset_.index(label); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int imp(int a, int b) const { return imp_[a * size() + b]; }
  int neg(int a) const { return imp(a, bottom_); }

  /// Exhaustive desk-scale law check: lattice axioms against the order,
  /// bounds, distributivity, the residuation adjunction, the modus ponens
  /// inequality meet(a, imp(a,b)) <= b, ex falso, and
  /// imp(a,b) = top iff a <= b.  Violations are reported in sorted order
  /// with named laws and witness elements.
  LawReport check_laws() const;

 private:
  HeytingAlgebra(FinitePoset p, int bottom, int top, std::vector<int> meet,
                 std::vector<int> join, std::vector<int> imp);
  FinitePoset poset_;
  int bottom_, top_;
  std::vector<int> meet_, join_, imp_;
};

/// Filter: member element indices, sorted ascending.  A valid filter
/// contains top, is closed under meet, and is upward closed.
struct Filter {
  std::vector<int> members;
  bool operator==(const Filter&) const = default;
};

bool is_filter(const HeytingAlgebra& h, const Filter& f);

/// Least filter containing the seed: add top, then close under meet and
/// upward until fixpoint.  The empty seed yields {top}.
Filter generate_filter(const HeytingAlgebra& h, const std::vector<int>& seed);

/// Upward closure of a single element.
Filter principal_filter(const HeytingAlgebra& h, int a);

/// Every filter of a finite algebra is principal, so this is {up(a) : a}.
std::vector<Filter> all_filters(const HeytingAlgebra& h);

struct QuotientResult {
  HeytingAlgebra algebra;
  std::vector<int> class_of;  // carrier index -> quotient element index
};

/// Quotient by the congruence x ~ y iff imp(x,y) and imp(y,x) both lie in f.
/// Classes are labeled by their smallest member, "[label]".  Well-definedness
/// of the induced operations is verified over all pairs.
QuotientResult quotient(const HeytingAlgebra& h, const Filter& f);

/// Join (respectively meet) over a nonempty element set; errors when empty.
int label_ceiling(const HeytingAlgebra& h, const std::vector<int>& elems);
int label_floor(const HeytingAlgebra& h, const std::vector<int>& elems);

/// Order isomorphism by backtracking; sizes capped at 8.  Order determines
/// the whole Heyting structure, so this is algebra isomorphism.
bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

/// All total functions between finite sets of the given sizes, enumerated as
/// value tables: function i maps arg x to (i / codomain^x) % codomain.
class FunctionSpace {
 public:
  FunctionSpace(int domain, int codomain);  // codomain^domain <= 2^20
  std::uint64_t count() const { return count_; }
  std::vector<int> table(std::uint64_t i) const;
  std::uint64_t index_of(const std::vector<int>& table) const;
  int domain() const { return domain_; }
  int codomain() const { return codomain_; }

 private:
  int domain_, codomain_;
  std::uint64_t count_;
};

struct CurryReport {
  std::uint64_t uncurried_count = 0;  // |C|^(|A|*|B|)
  std::uint64_t curried_count = 0;    // (|C|^|B|)^|A|
  bool bijection_ok = false;
  std::string str() const;
};

/// Exhibits the currying bijection (A x B -> C)  ~  (A -> C^B) for set sizes
/// 1..3 by enumerating both spaces and round-tripping every function.
CurryReport curry_check(int a, int b, int c);

/// Heyting-valued evaluation of a propositional formula.  N arguments are
/// expanded to the meet of their negations first.  Errors on unbound atoms.
int eval_in_algebra(const HeytingAlgebra& h, const logic::Formula& f,
                    const std::map<std::string, int>& env);

/// True when f evaluates to top under every assignment of algebra elements
/// to its atoms.
bool valid_in_algebra(const HeytingAlgebra& h, const logic::Formula& f);

/// Lattice spec file:
///   elements: a b c
///   a <= b
/// one relation per line; '#' comments and blank lines allowed.  The
/// reflexive-transitive closure is applied.
FinitePoset parse_poset_file(std::istream& in);

struct SurveyReport {
  int max_elems = 0;
  int posets = 0;
  int algebras_ok = 0;
  std::vector<std::pair<int, LawViolation>> failures;  // poset index, first law hit
  bool all_ok() const { return posets == algebras_ok; }
  std::string str() const;
};

/// Law survey over the downset algebras of every labeled poset on 1..max
/// elements.  The parallel kernel shards posets across threads; failures are
/// aggregated in poset-index order, so both modes emit identical reports.
SurveyReport downset_law_survey(int max_elems, ExecMode mode);

}  // namespace ccalc::heyting
