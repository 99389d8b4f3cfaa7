#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ccalc::subject {

/// Context index w, identity count n, relation value r, tied together by
/// w - n + r = 0.  Construction closes the vector from n and r.
struct SubjectVector {
  int w;
  int n;
  int r;
};

/// w = n - r; rejects a negative w or a negative n.
SubjectVector vector_close(int n, int r);

/// Number of external witnesses a homogeneous n-name identity needs:
/// n^2 - n.  ledger(0) = ledger(1) = 0.
std::int64_t ledger(std::int64_t n);

enum class Homogeneity { NonDeterminate, Determinate };

struct HomogeneityReport {
  Homogeneity verdict;
  // the exact ratio 1/(n^2 - n); zero denominator never stored, the
  // non-determinate verdict replaces it
  std::int64_t num = 0;
  std::int64_t den = 0;

  std::string str() const;  // "NON_DETERMINATE" or "DETERMINATE 1/90"
};

/// n = 1 divides by ledger(1) = 0 and is flagged non-determinate; n >= 2
/// yields the exact ratio.  n < 1 is an error.
HomogeneityReport homogeneity_flag(std::int64_t n);

/// Append-only list of zeroed functions (label, acquisition context).
/// Acquisition contexts never decrease along the list.
class Endowment {
 public:
  Endowment() = default;

  /// Value semantics: returns the extended endowment, the original is
  /// untouched.  Duplicate labels and a context below the last entry's are
  /// rejected.
  Endowment acquire(const std::string& label, int ctx) const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, int>>& entries() const {
    return entries_;
  }

  /// The entry with the largest acquisition context <= ctx; among equals
  /// the latest inserted wins.  Pure function of (endowment, ctx).  Errors
  /// when no entry applies.
  std::string project_identity(int ctx) const;

 private:
  std::vector<std::pair<std::string, int>> entries_;
};

/// Labeled binary edge between named nodes.
struct Predicate {
  std::string name;
  std::string a;
  std::string b;

  bool operator==(const Predicate&) const = default;
  std::string str() const;  // "F(x,z)"
};

/// Same ordered endpoints, labels free to differ.
bool same_extension(const Predicate& p, const Predicate& q);

/// Node-and-edge view of a situation.  Nodes are implicit in the edges;
/// a node incident to two or more predicates is a shared constant.
class StateOfAffairs {
 public:
  explicit StateOfAffairs(std::vector<Predicate> predicates);

  const std::vector<Predicate>& predicates() const { return predicates_; }
  std::vector<std::string> nodes() const;         // sorted, distinct
  std::vector<std::string> shared_nodes() const;  // incident to >= 2 edges

  /// Declare two nodes complements of one another (x and not-x).
  StateOfAffairs with_complement(const std::string& x,
                                 const std::string& nx) const;

  /// Edges whose two endpoints are declared complements: the identity
  /// paradox F(x, not-x) as a structural flag, not a contradiction.
  std::vector<Predicate> identity_paradox_edges() const;

  std::string str() const;

 private:
  std::vector<Predicate> predicates_;
  std::vector<std::pair<std::string, std::string>> complements_;
};

/// Join two predicates around a shared endpoint.  Identical predicates
/// collapse to a one-edge state (the self-edge tautology case); otherwise
/// a missing shared endpoint is an error.
StateOfAffairs compose_state(const Predicate& f, const Predicate& g);

/// Scope report for outer(inner(..), ..) nesting.  The inner predicate's
/// output is the node named "G(x,y)" style; the outer should touch only
/// that node, never the inner arguments.
struct OverdeterminationReport {
  std::string outer;
  std::string inner;
  std::string output_node;
  bool scope_opaque;                    // outer sees the output, no leakage
  std::vector<std::string> tampered;    // inner arguments wired into outer
  std::vector<std::string> witnesses;   // inner arguments beyond outer's reach
  bool complete;                        // no witness left (never, when inner
                                        // has two distinct arguments)
  std::string str() const;
};

OverdeterminationReport overdetermination_check(const StateOfAffairs& s,
                                                const std::string& outer,
                                                const std::string& inner);

/// Aligned pairing between two classes, left index i against right index
/// i + shift, truncated to what both sides can supply.
struct AffinityPairing {
  std::vector<std::string> left;
  std::vector<std::string> right;
  int shift = 0;

  std::vector<std::pair<std::string, std::string>> pairs() const;
  std::size_t pair_count() const;
  std::string str() const;  // "[f1, e1]" lines
};

AffinityPairing affinity(std::vector<std::string> left,
                         std::vector<std::string> right);  // errors when empty

/// Adds to the accumulated shift; the dropped left tail just leaves the
/// pairing.  An accumulated shift reaching the right class size is an
/// error (nothing left to pair).
AffinityPairing rearticulate(const AffinityPairing& p, int shift = 1);

}  // namespace ccalc::subject
