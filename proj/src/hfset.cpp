#include "ccalc/hfset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "ccalc/error.hpp"

namespace ccalc::hf {
namespace {

struct Node {
  std::vector<std::uint32_t> children;  // canonical order, no duplicates
  int rank = 0;
  std::size_t hash = 0;
};

// Append-only intern pool.  Id 0 is the empty set.  All access goes through
// the mutex; ids are only published after the node is fully built, and
// children always have smaller ids than their parent.
struct Pool {
  std::vector<Node> nodes;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::mutex mu;

  Pool() {
    nodes.push_back(Node{{}, 0, 0x9e3779b97f4a7c15ull});
    index.emplace(std::vector<std::uint32_t>{}, 0u);
  }

  int cmp(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return 0;
    const Node& na = nodes[a];
    const Node& nb = nodes[b];
    if (na.rank != nb.rank) return na.rank < nb.rank ? -1 : 1;
    if (na.children.size() != nb.children.size())
      return na.children.size() < nb.children.size() ? -1 : 1;
    for (std::size_t i = 0; i < na.children.size(); ++i) {
      int c = cmp(na.children[i], nb.children[i]);
      if (c != 0) return c;
    }
    return 0;
  }

  std::uint32_t intern(std::vector<std::uint32_t> kids) {
    std::sort(kids.begin(), kids.end(),
              [this](std::uint32_t a, std::uint32_t b) { return cmp(a, b) < 0; });
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    auto it = index.find(kids);
    if (it != index.end()) return it->second;
    Node n;
    n.rank = 0;
    n.hash = 0x9e3779b97f4a7c15ull;
    for (std::uint32_t k : kids) {
      n.rank = std::max(n.rank, nodes[k].rank + 1);
      n.hash ^= nodes[k].hash + 0x9e3779b97f4a7c15ull + (n.hash << 6) + (n.hash >> 2);
    }
    n.hash ^= kids.size() * 0xff51afd7ed558ccdull;
    n.children = kids;
    nodes.push_back(std::move(n));
    auto id = static_cast<std::uint32_t>(nodes.size() - 1);
    index.emplace(std::move(kids), id);
    return id;
  }

  void render(std::uint32_t id, std::string& out) const {
    out += '{';
    bool first = true;
    for (std::uint32_t c : nodes[id].children) {
      if (!first) out += ',';
      first = false;
      render(c, out);
    }
    out += '}';
  }
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

struct PoolAccess {
  static std::uint32_t id(const HFSet& s) { return s.id_; }
  static HFSet make(std::uint32_t id) { return HFSet(id); }
};

HFSet::HFSet() : id_(0) {}

HFSet::HFSet(std::vector<HFSet> elems) : id_(0) {
  std::vector<std::uint32_t> kids;
  kids.reserve(elems.size());
  for (const HFSet& e : elems) kids.push_back(e.id_);
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  id_ = p.intern(std::move(kids));
}

HFSet::HFSet(std::initializer_list<HFSet> elems)
    : HFSet(std::vector<HFSet>(elems)) {}

HFSet HFSet::empty() { return HFSet(); }

bool HFSet::is_empty() const { return id_ == 0; }

std::size_t HFSet::size() const {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  return p.nodes[id_].children.size();
}

int HFSet::rank() const {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  return p.nodes[id_].rank;
}

std::vector<HFSet> HFSet::elements() const {
  Pool& p = pool();
  std::vector<std::uint32_t> kids;
  {
    std::lock_guard<std::mutex> lock(p.mu);
    kids = p.nodes[id_].children;
  }
  std::vector<HFSet> out;
  out.reserve(kids.size());
  for (std::uint32_t k : kids) out.push_back(HFSet(k));
  return out;
}

bool HFSet::contains(const HFSet& x) const {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  const auto& kids = p.nodes[id_].children;
  return std::find(kids.begin(), kids.end(), x.id_) != kids.end();
}

HFSet HFSet::with(const HFSet& x) const {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  std::vector<std::uint32_t> kids = p.nodes[id_].children;
  kids.push_back(x.id_);
  return HFSet(p.intern(std::move(kids)));
}

std::strong_ordering HFSet::operator<=>(const HFSet& o) const {
  int c = compare(*this, o);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string HFSet::str() const {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  std::string out;
  p.render(id_, out);
  return out;
}

std::size_t HFSet::hash() const {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  return p.nodes[id_].hash;
}

int compare(const HFSet& a, const HFSet& b) {
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  return p.cmp(PoolAccess::id(a), PoolAccess::id(b));
}

bool is_transitive(const HFSet& s) {
  for (const HFSet& e : s.elements())
    for (const HFSet& ee : e.elements())
      if (!s.contains(ee)) return false;
  return true;
}

bool is_ordinal(const HFSet& s) {
  // Elements of an interned ordinal are shared, so memoize by value.
  std::vector<HFSet> todo{s};
  std::vector<HFSet> seen;
  while (!todo.empty()) {
    HFSet cur = todo.back();
    todo.pop_back();
    bool dup = false;
    for (const HFSet& v : seen)
      if (v == cur) {
        dup = true;
        break;
      }
    if (dup) continue;
    if (!is_transitive(cur)) return false;
    seen.push_back(cur);
    for (const HFSet& e : cur.elements()) todo.push_back(e);
  }
  return true;
}

Ordinal::Ordinal() : set_(HFSet::empty()), nat_(0) {}

Ordinal Ordinal::zero() { return Ordinal(); }

Ordinal Ordinal::succ() const {
  if (nat_ >= kMaxOrdinal)
    throw domain_error("ordinal successor past the cap of " +
                       std::to_string(kMaxOrdinal));
  return Ordinal(set_.with(set_), nat_ + 1);
}

Ordinal ord_of_nat(int n) {
  if (n < 0 || n > kMaxOrdinal)
    throw domain_error("ordinal out of range 0.." + std::to_string(kMaxOrdinal) +
                       ": " + std::to_string(n));
  Ordinal o;
  for (int i = 0; i < n; ++i) o = o.succ();
  return o;
}

int nat_of_ord(const HFSet& s) {
  if (!is_ordinal(s)) throw domain_error("not a von Neumann ordinal: " + s.str());
  return static_cast<int>(s.size());
}

bool ord_leq(const Ordinal& a, const Ordinal& b) {
  return a.set() == b.set() || b.set().contains(a.set());
}

HFSet pair(const HFSet& a, const HFSet& b) {
  return HFSet{HFSet{a}, HFSet{a, b}};
}

std::optional<std::pair<HFSet, HFSet>> as_pair(const HFSet& s) {
  auto kids = s.elements();
  if (kids.size() == 1) {
    if (kids[0].size() != 1) return std::nullopt;
    HFSet a = kids[0].elements()[0];
    return std::make_pair(a, a);
  }
  if (kids.size() != 2) return std::nullopt;
  // Canonical order puts the singleton {a} first: it never outranks {a,b}
  // and loses the size tiebreak.
  if (kids[0].size() != 1 || kids[1].size() != 2) return std::nullopt;
  HFSet a = kids[0].elements()[0];
  auto both = kids[1].elements();
  if (both[0] != a && both[1] != a) return std::nullopt;
  HFSet b = both[0] == a ? both[1] : both[0];
  return std::make_pair(a, b);
}

HFSet nest(const std::vector<HFSet>& xs) {
  if (xs.empty()) throw domain_error("nest of an empty list");
  HFSet acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = pair(xs[i], acc);
  return acc;
}

SubsetRing::SubsetRing(std::vector<std::string> atoms) {
  if (atoms.size() > 64) throw domain_error("subset ring universe larger than 64");
  std::set<std::string> uniq(atoms.begin(), atoms.end());
  if (uniq.size() != atoms.size())
    throw domain_error("subset ring universe has duplicate atoms");
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
}

bool SubsetRing::Elem::operator==(const Elem& o) const {
  return bits_ == o.bits_ && (uni_ == o.uni_ || *uni_ == *o.uni_);
}

std::string SubsetRing::Elem::str() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < uni_->size(); ++i) {
    if (bits_ >> i & 1u) {
      if (!first) out += ',';
      first = false;
      out += (*uni_)[i];
    }
  }
  out += '}';
  return out;
}

SubsetRing::Elem SubsetRing::zero() const { return Elem(atoms_, 0); }

SubsetRing::Elem SubsetRing::one() const {
  std::uint64_t all = atoms_->size() == 64
                          ? ~0ull
                          : (1ull << atoms_->size()) - 1;
  return Elem(atoms_, all);
}

SubsetRing::Elem SubsetRing::element(const std::vector<std::string>& members) const {
  std::uint64_t bits = 0;
  for (const std::string& m : members) {
    auto it = std::find(atoms_->begin(), atoms_->end(), m);
    if (it == atoms_->end())
      throw domain_error("atom not in ring universe: " + m);
    bits |= 1ull << (it - atoms_->begin());
  }
  return Elem(atoms_, bits);
}

SubsetRing::Elem SubsetRing::element_mask(std::uint64_t bits) const {
  if (atoms_->size() < 64 && bits >> atoms_->size())
    throw domain_error("subset mask outside the ring universe");
  return Elem(atoms_, bits);
}

std::vector<SubsetRing::Elem> SubsetRing::all_elements() const {
  if (atoms_->size() > 20)
    throw domain_error("subset ring enumeration limited to 20 atoms");
  std::vector<Elem> out;
  out.reserve(1ull << atoms_->size());
  for (std::uint64_t m = 0; m < (1ull << atoms_->size()); ++m)
    out.push_back(Elem(atoms_, m));
  return out;
}

namespace {
void check_same_universe(const SubsetRing::Elem& a, const SubsetRing::Elem& b) {
  if (a.universe() != b.universe())
    throw domain_error("subset ring elements from different universes");
}
}  // namespace

SubsetRing::Elem ring_add(const SubsetRing::Elem& a, const SubsetRing::Elem& b) {
  check_same_universe(a, b);
  SubsetRing::Elem r = a;
  r.bits_ ^= b.bits_;
  return r;
}

SubsetRing::Elem ring_mul(const SubsetRing::Elem& a, const SubsetRing::Elem& b) {
  check_same_universe(a, b);
  SubsetRing::Elem r = a;
  r.bits_ &= b.bits_;
  return r;
}

}  // namespace ccalc::hf
