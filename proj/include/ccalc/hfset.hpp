#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccalc::hf {

/// Hereditarily finite set with value semantics.
///
/// Values are interned in a process-wide pool, so equality is O(1) and deeply
/// shared structures (von Neumann ordinals in particular) stay linear in
/// memory even though their serialized form grows exponentially.  The pool is
/// an implementation detail; nothing observable distinguishes two equal sets
/// built along different routes.
///
/// Canonical element order: by rank, then by element count, then
/// lexicographically on the ordered child lists.  Serialization always lists
/// elements in that order, so it is a total invariant of the value.
class HFSet {
 public:
  HFSet();  // the empty set
  explicit HFSet(std::vector<HFSet> elems);
  HFSet(std::initializer_list<HFSet> elems);

  static HFSet empty();

  bool is_empty() const;
  std::size_t size() const;
  int rank() const;
  std::vector<HFSet> elements() const;
  bool contains(const HFSet& x) const;
  HFSet with(const HFSet& x) const;

  bool operator==(const HFSet& o) const { return id_ == o.id_; }
  std::strong_ordering operator<=>(const HFSet& o) const;

  std::string str() const;
  std::size_t hash() const;

 private:
  explicit HFSet(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
  friend struct PoolAccess;
};

/// -1, 0, +1 in canonical order.
int compare(const HFSet& a, const HFSet& b);

/// True iff every element of s is also a subset of s.
bool is_transitive(const HFSet& s);

/// Hereditarily transitive, i.e. a von Neumann natural.
bool is_ordinal(const HFSet& s);

inline constexpr int kMaxOrdinal = 64;

/// Finite von Neumann ordinal, capped at kMaxOrdinal.
class Ordinal {
 public:
  Ordinal();  // zero
  static Ordinal zero();
  Ordinal succ() const;  // errors past the cap
  int nat() const { return nat_; }
  const HFSet& set() const { return set_; }
  bool operator==(const Ordinal&) const = default;
  auto operator<=>(const Ordinal& o) const { return nat_ <=> o.nat_; }

 private:
  Ordinal(HFSet s, int n) : set_(std::move(s)), nat_(n) {}
  HFSet set_;
  int nat_;
  friend Ordinal ord_of_nat(int n);
};

Ordinal ord_of_nat(int n);          // errors outside 0..kMaxOrdinal
int nat_of_ord(const HFSet& s);     // errors if s is not an ordinal
inline int nat_of_ord(const Ordinal& o) { return o.nat(); }

/// Ordinal order: a <= b iff a is an element of b or a equals b.
bool ord_leq(const Ordinal& a, const Ordinal& b);

/// Kuratowski pair {{a},{a,b}}; collapses to {{a}} when a = b.
HFSet pair(const HFSet& a, const HFSet& b);

/// Inverse of pair; nullopt when s is not a pair.
std::optional<std::pair<HFSet, HFSet>> as_pair(const HFSet& s);

/// Right-nested tuple: nest([x]) = x, nest([x,rest...]) = pair(x, nest(rest)).
/// Errors on an empty list.
HFSet nest(const std::vector<HFSet>& xs);

/// Boolean ring of subsets of a fixed finite universe of named atoms.
/// Addition is symmetric difference, multiplication is intersection, so every
/// element is its own additive inverse and multiplication is idempotent.
class SubsetRing {
 public:
  class Elem {
   public:
    std::uint64_t bits() const { return bits_; }
    const std::vector<std::string>& universe() const { return *uni_; }
    bool operator==(const Elem& o) const;
    std::string str() const;

   private:
    Elem(std::shared_ptr<const std::vector<std::string>> u, std::uint64_t b)
        : uni_(std::move(u)), bits_(b) {}
    std::shared_ptr<const std::vector<std::string>> uni_;
    std::uint64_t bits_;
    friend class SubsetRing;
    friend Elem ring_add(const Elem&, const Elem&);
    friend Elem ring_mul(const Elem&, const Elem&);
  };

  explicit SubsetRing(std::vector<std::string> atoms);  // at most 64, unique

  std::size_t atom_count() const { return atoms_->size(); }
  Elem zero() const;
  Elem one() const;  // the full universe
  Elem element(const std::vector<std::string>& members) const;
  Elem element_mask(std::uint64_t bits) const;
  std::vector<Elem> all_elements() const;  // 2^n, ascending mask order

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

SubsetRing::Elem ring_add(const SubsetRing::Elem& a, const SubsetRing::Elem& b);
SubsetRing::Elem ring_mul(const SubsetRing::Elem& a, const SubsetRing::Elem& b);

}  // namespace ccalc::hf
