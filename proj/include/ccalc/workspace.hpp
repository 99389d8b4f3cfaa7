#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccalc/hfset.hpp"

namespace ccalc::workspace {

/// Binary syntactic object: a named leaf or a named two-element set of
/// objects.  Values share structure; a copy is the same object.  Children
/// sit in canonical order (sorted by serialized form), which is what the
/// L/R path letters refer to.
class SyntacticObject {
 public:
  struct Node;

  bool is_leaf() const;
  const std::string& label() const;
  SyntacticObject child(int i) const;  // 0 left, 1 right; errors on leaf
  bool same_object(const SyntacticObject& other) const;

  /// Leaf prints as its label, node as "c:{a,b}" with children in canonical
  /// order, recursively.
  const std::string& str() const;

 private:
  friend class Workspace;
  explicit SyntacticObject(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// One occurrence record for a lexical item: stage at query time, the item,
/// and every path at which it occurs.  Paths are L/R steps joined by "/";
/// the bare root position prints as "/".
struct DerivationTriple {
  int stage;
  std::string name;
  int lex_index;                   // order of introduction, 0-based
  std::vector<std::string> paths;  // sorted lexicographically

  std::string str() const;  // "<1, a, {L}>"

  /// nest([stage, lex index, path set]) where stage and index are von
  /// Neumann ordinals and a path encodes as: "" -> 0, L prefix ->
  /// pair(0, rest), R prefix -> pair(1, rest).
  hf::HFSet to_hfset() const;
};

/// Immutable derivation state: a set of disjoint roots plus the merge
/// count.  Every operation returns a new workspace; a failed operation
/// leaves the original untouched.  All labels (lexical and assigned) are
/// unique within one workspace.
class Workspace {
 public:
  Workspace() = default;

  /// Introduce a fresh leaf as a new root.  Errors on a duplicate label.
  Workspace lex(const std::string& name) const;

  /// merge resolves y by label.  A distinct root: external merge, the two
  /// roots become one new root {x,y}.  A proper subterm of x: internal
  /// merge, the new root {x, sub} shares the subterm (the copy is the same
  /// object), root count unchanged.  A subterm of any other root: rejected,
  /// nothing may reach into a foreign root.  Stage increments on success.
  Workspace merge(const std::string& x, const std::string& y,
                  const std::string& as) const;

  /// Internal merge with the subterm named by an explicit nonempty path
  /// ("L/R" style) instead of a label.
  Workspace imerge(const std::string& root, const std::string& path,
                   const std::string& as) const;

  int stage_nat() const { return stage_; }
  hf::Ordinal stage() const;
  std::size_t root_count() const { return roots_.size(); }
  const std::vector<SyntacticObject>& roots() const { return roots_; }

  /// Sorted labels of the distinct leaf objects reachable from the roots.
  /// Invariant under merge: nothing is ever lost.
  std::vector<std::string> leaf_names() const;

  /// Occurrence record for a lexical item; errors when absent.
  DerivationTriple triple(const std::string& name) const;

  /// "stage: k" then one "root: <obj>" line per root in canonical order.
  std::string str() const;

 private:
  std::vector<SyntacticObject> roots_;
  std::vector<std::string> lexicon_;  // introduction order
  int stage_ = 0;
};

/// Replay of a line-based derivation script:
///   lex <name>
///   merge <x> <y> as <name>
///   imerge <root> <path> as <name>
///   triple <name>
/// Blank lines and "#" comments are skipped.  Errors carry the line number.
struct ScriptResult {
  Workspace ws;
  std::vector<std::string> triples;  // formatted triple outputs, in order
};
ScriptResult run_script(std::string_view text);

/// One link of a citation chain: w1, w1', w1'' share a chain label and
/// count primes with the index.  Validity is inherited from the record
/// cited.
struct CitationRecord {
  std::string chain_label;
  int index;
  std::string assertion;
  bool valid;

  std::string str() const;  // label plus index many primes
};

/// Append-only chain where each record cites exactly its predecessor.
class CitationChain {
 public:
  static CitationChain start(std::string chain_label, std::string assertion,
                             bool valid = true);

  CitationChain cite(std::string assertion) const;  // cites the head

  /// Citing any record other than the head is rejected.
  CitationChain cite_from(int index, std::string assertion) const;

  const std::vector<CitationRecord>& records() const { return records_; }
  const CitationRecord& head() const { return records_.back(); }

  /// Earliest record whose assertion is the name, or nothing.  Names apply
  /// only along their own chain.
  std::optional<std::size_t> resolve(const std::string& name) const;

  std::string str() const;  // one "w1': assertion" line per record

 private:
  std::vector<CitationRecord> records_;
};

std::optional<std::size_t> resolve(const std::string& name,
                                   const CitationChain& chain);

/// Axiom-set chain A0, A1, ... where each step adjoins the previous
/// stage's own name as a new axiom.  Axiom sets strictly increase.
class ContextChain {
 public:
  ContextChain(std::string base_label, std::vector<std::string> base_axioms);

  ContextChain step() const;

  /// Mark the head as stage 0 of a fresh chain with a new label, carrying
  /// the axiom content over unchanged.
  ContextChain rebase(std::string new_base_label) const;

  std::size_t length() const { return stages_.size(); }
  std::string stage_name(std::size_t i) const;
  const std::vector<std::string>& axioms(std::size_t i) const;

  std::string str() const;  // "A0: {..}" lines

 private:
  std::string base_;
  std::vector<std::vector<std::string>> stages_;  // each sorted
};

}  // namespace ccalc::workspace
